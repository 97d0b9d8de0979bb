"""Poset splitting analysis: a finite-poset engine for antichains, splits,
and strong density, plus a countable strongly dense order with a decidable
comparison whose standard two-element maximal antichain does not split.
"""

from .dense import (
    MAX_TRUNCATION_ELEMENTS,
    ROOT,
    MaximalityCheck,
    Node,
    PartitionRefutation,
    Truncation,
    UnsplitCertificate,
    check_pair_maximality,
    incomparable,
    interval_antichain,
    leq,
    leq_at,
    lt,
    nonsplit_certificate,
    parse_node,
    render_node,
    root_pair,
    truncation,
    words_up_to,
)
from .errors import CapacityError, InputError, PosetError, PreconditionError
from .finite import (
    DEFAULT_BOUND,
    DensityCheck,
    FinitePoset,
    SplitPartition,
    SplittingCheck,
)
from .sampler import (
    AegReport,
    AegRow,
    SampleConfig,
    random_poset,
    sample_strongly_dense,
    verify_aeg,
)
from .textio import dump, dumps, load, loads, to_dot

__version__ = "0.1.0"

__all__ = [
    "AegReport",
    "AegRow",
    "CapacityError",
    "DEFAULT_BOUND",
    "DensityCheck",
    "FinitePoset",
    "InputError",
    "MAX_TRUNCATION_ELEMENTS",
    "MaximalityCheck",
    "Node",
    "PartitionRefutation",
    "PosetError",
    "PreconditionError",
    "ROOT",
    "SampleConfig",
    "SplitPartition",
    "SplittingCheck",
    "Truncation",
    "UnsplitCertificate",
    "check_pair_maximality",
    "dump",
    "dumps",
    "incomparable",
    "interval_antichain",
    "leq",
    "leq_at",
    "load",
    "loads",
    "lt",
    "nonsplit_certificate",
    "parse_node",
    "random_poset",
    "render_node",
    "root_pair",
    "sample_strongly_dense",
    "to_dot",
    "truncation",
    "verify_aeg",
    "words_up_to",
]
