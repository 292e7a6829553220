"""Exact invariants and non-looseness certificates for Legendrian knots.

The library computes classical and rational classical invariants of
Legendrian and transverse knots from combinatorial front words and contact
(+-1)-surgery presentations, entirely in exact arithmetic, and packages the
resulting looseness obstructions and depth/tension/order bounds as tagged
certificates.
"""

from .calculus import (
    ClassicalPair,
    RationalData,
    pushoff_sl,
    pushoff_sl_rational,
    rational_from_classical,
    reverse_class,
    reverse_rational,
    stabilize_class,
    stabilize_rational,
)
from .certify import (
    Certificate,
    CheckResult,
    Depth2Witness,
    Reason,
    Verdict,
    bennequin_null,
    bennequin_rational,
    bundle_is_consistent,
    certificate_bounds,
    check_consistency,
    depth2_check,
    depth_one_dual,
    not_a_stabilization_by_max_tb,
    order_bounds,
    order_zero_by_tb_bound,
    possurg_depth_one,
    tension_certificate,
    tension_less_than_depth_search,
    tension_one_dual,
    tension_refinement,
    tension_upper_bound,
    transverse_bennequin,
    transverse_transfer,
    unknot_verdict,
)
from .diagram import (
    Direction,
    EventKind,
    FrontEvent,
    FrontWord,
    OrientedFront,
    destabilize_front,
    detect_syntactic_destabilization,
    parse_front,
    resolve_orientation,
    reverse_orientation,
    rot,
    serialize_front,
    stabilize_front,
    tb,
)
from .errors import DomainError
from .knotdata import (
    KnotRecord,
    load_records,
    named_example,
    negative_torus_record,
    nonloose_unknot_table,
    positive_torus_record,
    unknot_record,
)
from .linalg import INFINITE, SmithDecomposition
from .surgery import (
    SurgeryComponent,
    SurgeryDiagram,
    det_exact,
    diagram_from_json,
    diagram_to_json,
    dual_invariants,
    extended_matrix,
    homological_order,
    invert_exact,
    linking_matrix,
    rational_invariants,
    smith_normal_form,
)

__version__ = "0.1.0"
