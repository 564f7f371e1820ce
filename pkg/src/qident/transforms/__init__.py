"""Transformation kernels, identity iteration, relations, and inverses."""

from .engine import IdentitySpec, ShapeMismatch, apply_transform, seed_identity, verify_identity
from .inverses import inverse_kernel_eval, m_entry, verify_inverse, verify_m_group
from .kernels import KERNELS, kernel_eval, rhs_eval, verify_kernel_lemma
from .relations import PAPER_NOVEL, RELATIONS, verify_all_relations, verify_relation

__all__ = [
    "KERNELS",
    "PAPER_NOVEL",
    "RELATIONS",
    "IdentitySpec",
    "ShapeMismatch",
    "apply_transform",
    "inverse_kernel_eval",
    "kernel_eval",
    "m_entry",
    "rhs_eval",
    "seed_identity",
    "verify_all_relations",
    "verify_identity",
    "verify_inverse",
    "verify_kernel_lemma",
    "verify_m_group",
]
