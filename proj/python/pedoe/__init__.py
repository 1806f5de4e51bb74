"""Circles and spheres as unit vectors of an isotropic Minkowski space."""

from ._pedoe import (
    Hyperplane,
    NoRealSolutionError,
    PedoeError,
    Point,
    Sphere,
    apollonius,
    apollonius_all,
    complete_configuration,
    curvature_solve,
    dual_products,
    family_identity_residual,
    gasket,
    gram,
    inertia,
    inner,
    master_residual,
    metric,
    orthogonal_circle,
    pedoe_product,
    pedoe_vector,
    realizable,
    soddy_circles,
    sphere_from_vector,
)

__all__ = [
    "Hyperplane",
    "NoRealSolutionError",
    "PedoeError",
    "Point",
    "Sphere",
    "apollonius",
    "apollonius_all",
    "complete_configuration",
    "curvature_solve",
    "dual_products",
    "family_identity_residual",
    "gasket",
    "gram",
    "inertia",
    "inner",
    "master_residual",
    "metric",
    "orthogonal_circle",
    "pedoe_product",
    "pedoe_vector",
    "realizable",
    "soddy_circles",
    "sphere_from_vector",
]
