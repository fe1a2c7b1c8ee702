"""Spinoriality and Stiefel-Whitney classes of real representations of S_n, A_n and S_n x S_n'."""
from .characters import (
    CharTriple,
    frobenius_skew_expansion,
    g_and_h,
    mn_character,
    perm_module_triple,
    skew_g_h,
    skew_syt_count,
    special_triple,
)
from .partitions import Partition, conjugate, dimension, enumerate_partitions, epsilon
from .reps import ExplicitTriple, PermModule, Specht, Sum, triple_of
from .spinoriality import (
    AnIrreducibleLabel,
    SpinReport,
    Variant,
    classify_an_irreducible,
    classify_an_restriction,
    classify_product,
    classify_sn,
    density_sweep,
    product_five_conditions,
)
from .stiefel_whitney import H1Class, H2Class, H2ProductClass, spin_via_w, w1_of, w2_of

__version__ = "0.1.0"
