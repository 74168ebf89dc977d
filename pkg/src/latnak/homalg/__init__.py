from latnak.homalg.complexes import (
    ChainMap,
    ProjComplex,
    cocone,
    cone,
    direct_sum,
    dual,
    is_acyclic,
    minimize,
    shift,
    stalk,
    stalk_projective,
    transport,
    zero_complex,
)
from latnak.homalg.hom import HomComplex, HomDims, hom_dims, is_iso, is_iso_map
from latnak.homalg.modules import (
    Representation,
    injective_resolution_as_proj,
    nakayama_functor,
    resolve,
    simple_resolution,
)
from latnak.homalg.projections import (
    check_exceptional_sequence,
    exceptional_decompose,
    is_in_thick,
    project_left,
    project_right,
    sub_serre,
    sub_serre_inverse,
    sub_serre_power,
)
from latnak.homalg.serre import fractional_cy, serre, serre_inverse, serre_power

__all__ = [
    "ChainMap",
    "HomComplex",
    "HomDims",
    "ProjComplex",
    "Representation",
    "check_exceptional_sequence",
    "cocone",
    "cone",
    "direct_sum",
    "dual",
    "exceptional_decompose",
    "fractional_cy",
    "hom_dims",
    "injective_resolution_as_proj",
    "is_acyclic",
    "is_in_thick",
    "is_iso",
    "is_iso_map",
    "minimize",
    "nakayama_functor",
    "project_left",
    "project_right",
    "resolve",
    "serre",
    "serre_inverse",
    "serre_power",
    "shift",
    "simple_resolution",
    "stalk",
    "stalk_projective",
    "sub_serre",
    "sub_serre_inverse",
    "sub_serre_power",
    "transport",
    "zero_complex",
]
