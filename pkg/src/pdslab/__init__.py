"""Partial difference sets over finite fields, with exact certification."""

from .bent import (
    PAryFunction,
    WalshSpectrum,
    homogeneity_degree,
    level_sets,
    verify_lemma33,
    walsh_spectrum,
)
from .cyclo import (
    CycInt,
    cyclotomic_classes,
    cyclotomic_periods_direct,
    minimal_j,
    uniform_periods_closed_form,
)
from .gf import FiniteField, construct_field
from .groupring import AdditiveGroup, GroupRingElem
from .pds import (
    GroupSubset,
    PdsParams,
    VerificationReport,
    classify_latin_type,
    construct_affine_polar,
    construct_bent_pds,
    construct_cyclotomic_pds,
    construct_rt2,
    verify_pds_bruteforce,
    verify_pds_characters,
)
from .qform import QuadraticForm, form_type, standard_elliptic, standard_hyperbolic
from .scheme import (
    SchemeCertificate,
    TranslationPartition,
    build_bent_scheme,
    build_cyclotomic_scheme,
    certify_amorphic,
    check_scheme,
)

__all__ = [
    "AdditiveGroup",
    "CycInt",
    "FiniteField",
    "GroupRingElem",
    "GroupSubset",
    "PAryFunction",
    "PdsParams",
    "QuadraticForm",
    "SchemeCertificate",
    "TranslationPartition",
    "VerificationReport",
    "WalshSpectrum",
    "build_bent_scheme",
    "build_cyclotomic_scheme",
    "certify_amorphic",
    "check_scheme",
    "classify_latin_type",
    "construct_affine_polar",
    "construct_bent_pds",
    "construct_cyclotomic_pds",
    "construct_field",
    "construct_rt2",
    "cyclotomic_classes",
    "cyclotomic_periods_direct",
    "form_type",
    "homogeneity_degree",
    "level_sets",
    "minimal_j",
    "standard_elliptic",
    "standard_hyperbolic",
    "uniform_periods_closed_form",
    "verify_lemma33",
    "verify_pds_bruteforce",
    "verify_pds_characters",
    "walsh_spectrum",
]

__version__ = "0.1.0"
