"""Convex polytopes, analytic shapes, surface areas and shadows."""

from .measures import (
    complement_bases,
    facets,
    mean_width_check_2d,
    orthonormal_complement,
    shadow_area,
    shadow_area_from_facets,
    shadow_areas,
    surface_area,
)
from .shapes import Ball, Cube, Direction, Facet, Polytope, Shape

__all__ = [
    "Ball",
    "Cube",
    "Direction",
    "Facet",
    "Polytope",
    "Shape",
    "complement_bases",
    "facets",
    "mean_width_check_2d",
    "orthonormal_complement",
    "shadow_area",
    "shadow_area_from_facets",
    "shadow_areas",
    "surface_area",
]
