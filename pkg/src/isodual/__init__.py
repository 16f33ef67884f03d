"""Iso-self-dual cyclic codes over finite fields from Type-I duadic splittings."""

from .codes import (
    CyclicCode,
    IsoSelfDualCertificate,
    certify_iso_self_dual,
    code_from_support,
    dual_code,
    encode,
    isometry_image,
    mds_construct,
    min_distance,
    weight_distribution,
)
from .gf import Field, field_build, field_of_order, root_of_unity
from .polyring import Polynomial, defining_polynomial
from .splitting import build_splitting, enumerate_splittings, exists_splitting
from .zn import QPermutation, cyclotomic_cosets, qperm_make

__all__ = [
    "CyclicCode",
    "Field",
    "IsoSelfDualCertificate",
    "Polynomial",
    "QPermutation",
    "build_splitting",
    "certify_iso_self_dual",
    "code_from_support",
    "cyclotomic_cosets",
    "defining_polynomial",
    "dual_code",
    "encode",
    "enumerate_splittings",
    "exists_splitting",
    "field_build",
    "field_of_order",
    "isometry_image",
    "mds_construct",
    "min_distance",
    "qperm_make",
    "root_of_unity",
    "weight_distribution",
]
