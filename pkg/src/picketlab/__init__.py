"""Embeddings of modules over Z/p^N, their LR-tableaux, and Hom spaces into pickets."""

from .embeddings import (
    Embedding,
    Picket,
    construct_a,
    construct_c,
    decompose_s1,
    dual,
    lr_tableau_of,
    make_embedding,
    make_g,
    make_h,
    picket,
    subfactor,
)
from .homs import (
    hom_from_picket,
    hom_space,
    hom_to_picket,
    pairing_left,
    pairing_right,
    quotient_dim_from_picket,
    quotient_dim_to_picket,
)
from .lr_tableaux import LRTableau, count_boxes, enumerate_tableaux, validate
from .partitions import Partition, transpose

__all__ = [
    "Embedding",
    "LRTableau",
    "Partition",
    "Picket",
    "construct_a",
    "construct_c",
    "count_boxes",
    "decompose_s1",
    "dual",
    "enumerate_tableaux",
    "hom_from_picket",
    "hom_space",
    "hom_to_picket",
    "lr_tableau_of",
    "make_embedding",
    "make_g",
    "make_h",
    "pairing_left",
    "pairing_right",
    "picket",
    "quotient_dim_from_picket",
    "quotient_dim_to_picket",
    "subfactor",
    "transpose",
    "validate",
]
