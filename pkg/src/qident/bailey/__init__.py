"""Basic hypergeometric series, the identity catalog, and Bailey pairs."""

from .phi import (
    Nonterminating,
    ParameterPole,
    PhiSeries,
    inf_poch_ratio,
    phi,
    wseries,
)
from .catalog import (
    SUMMATIONS,
    TRANSFORMATIONS,
    SeriesIdentity,
    SkipCase,
    verify_catalog,
    verify_identity,
)
from .pairs import (
    INF,
    LEMMAS,
    BaileyPair,
    LimitNotSupported,
    apply_lemma,
    bl0,
    bl2,
    bl3,
    bl4,
    bl4p,
    bis1,
    bis2,
    inv_bl2,
    inv_bl3,
    inv_bl4,
    inv_bl4p,
    odd2,
    pairs_agree,
    unit_pair,
    verify_pair,
)

__all__ = [
    "INF",
    "LEMMAS",
    "SUMMATIONS",
    "TRANSFORMATIONS",
    "BaileyPair",
    "LimitNotSupported",
    "Nonterminating",
    "ParameterPole",
    "PhiSeries",
    "SeriesIdentity",
    "SkipCase",
    "apply_lemma",
    "bl0",
    "bl2",
    "bl3",
    "bl4",
    "bl4p",
    "bis1",
    "bis2",
    "inf_poch_ratio",
    "inv_bl2",
    "inv_bl3",
    "inv_bl4",
    "inv_bl4p",
    "odd2",
    "pairs_agree",
    "phi",
    "unit_pair",
    "verify_pair",
    "verify_catalog",
    "verify_identity",
    "wseries",
]
