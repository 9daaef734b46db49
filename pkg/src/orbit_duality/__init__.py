"""Duality maps on (nilpotent orbit, canonical-quotient class) pairs.

Classical types are handled through marked partitions; the exceptional
groups come from bundled poset data.
"""
from .duality import (
    canonical_inverse,
    d_bv,
    d_ls,
    d_s,
    dbar,
    dbar_trace,
    dual_group_type,
    partial_specialize,
    pi_marking,
    specialize,
)
from .errors import DatasetUnavailable, DomainError, IntegrityError
from .exceptional import exceptional_dbar, load_group, load_path, validate_dataset
from .marked import (
    MarkedPartition,
    block_kind,
    divide_into_blocks,
    equivalent,
    is_reduced,
    is_special,
    reduce,
)
from .partitions import (
    GroupType,
    Partition,
    class_membership,
    collapse,
    dominance_leq,
    is_special_partition,
    superiority,
    transpose,
)
from .poset import (
    LabeledPoset,
    dbar_via_characterization,
    enumerate_labels,
    hasse,
    pair_leq,
    special_set,
)
from .verification import SuiteReport, run_suite

__version__ = "0.1.0"
