from latnak.algebra.bound import (
    BoundQuiverAlgebra,
    arrows,
    corner,
    kill_vertices,
    path_algebra,
    quotient,
    tensor,
)
from latnak.algebra.cartan import IntMatrix, cartan, cartan_lattice
from latnak.algebra.catalog import (
    algebra_from_descriptor,
    intro_lattice_algebra,
    lattice_algebra,
    lattice_quiver,
    lattice_shriek,
    nakayama,
    nakayama_lattice_parameters,
    nn,
    path_algebra_an,
)
from latnak.algebra.quiver import Arrow, BasisPath, Quiver, Vertex, linear_quiver

__all__ = [
    "Arrow",
    "BasisPath",
    "BoundQuiverAlgebra",
    "IntMatrix",
    "Quiver",
    "Vertex",
    "algebra_from_descriptor",
    "arrows",
    "cartan",
    "cartan_lattice",
    "corner",
    "intro_lattice_algebra",
    "kill_vertices",
    "lattice_algebra",
    "lattice_quiver",
    "lattice_shriek",
    "linear_quiver",
    "nakayama",
    "nakayama_lattice_parameters",
    "nn",
    "path_algebra",
    "path_algebra_an",
    "quotient",
    "tensor",
]
