"""Exact enumeration of 3-nilpotent semigroups.

Counts are exact python ints; bound sums are exact fractions.  Cycle types
are spelled as strings like ``"1^2,2^1"``.
"""

from fractions import Fraction

from ._nilcount import (
    __version__,
    bell,
    beta,
    binomial,
    classify,
    commutative_identity,
    commutative_presentation,
    delta,
    eta,
    factorial,
    fixed_partial_partitions,
    fixed_points_brute,
    gamma,
    iso_classes_exact,
    orbit_census,
    partial_partition_count,
    partitions_of,
    rank_stratified_presentation,
    scaled_stirling,
    stats,
    stirling2,
    t_identity,
    t_presentation,
    twisted_fixed_points,
    weight,
    zeta,
)
from . import _nilcount as _ext

__all__ = [
    "__version__",
    "bell",
    "beta",
    "binomial",
    "classify",
    "commutative_identity",
    "commutative_presentation",
    "commutative_semirigid_bound",
    "correction_term_1a2b",
    "delta",
    "equivalence_semirigid_bound",
    "eta",
    "factorial",
    "fixed_partial_partitions",
    "fixed_points_brute",
    "gamma",
    "iso_classes_exact",
    "orbit_census",
    "partial_partition_count",
    "partitions_of",
    "rank_stratified_presentation",
    "scaled_stirling",
    "selfdual_semirigid_bound",
    "semirigid_iso_bound",
    "stats",
    "stirling2",
    "t_identity",
    "t_presentation",
    "tn_over_nfact",
    "twisted_fixed_points",
    "weight",
    "zeta",
]


def tn_over_nfact(n):
    """t_n / n! as an exact fraction (a lower bound for the iso count)."""
    return Fraction(_ext.tn_over_nfact(n))


def correction_term_1a2b(mu1, mu2, n):
    """Modulus-2 correction for cycle type 1^mu1 2^mu2 as an exact fraction."""
    return Fraction(_ext.correction_term_1a2b(mu1, mu2, n))


def _wrap_bound(raw):
    raw["rational"] = Fraction(raw["rational"])
    raw["terms"] = [
        {"r": t["r"], "lambda": t["lambda"], "value": Fraction(t["value"])}
        for t in raw["terms"]
    ]
    return raw


def semirigid_iso_bound(n):
    """Upper bound for semirigid isomorphism classes of order n."""
    return _wrap_bound(_ext.semirigid_iso_bound(n))


def commutative_semirigid_bound(n):
    """Upper bound for semirigid commutative isomorphism classes."""
    return _wrap_bound(_ext.commutative_semirigid_bound(n))


def selfdual_semirigid_bound(n):
    """Upper bound for self-dual semirigid isomorphism classes."""
    return _wrap_bound(_ext.selfdual_semirigid_bound(n))


def equivalence_semirigid_bound(n):
    """Upper bound for semirigid classes up to equivalence."""
    return _wrap_bound(_ext.equivalence_semirigid_bound(n))
