"""Convex hulls of finite torus-subgroup orbits in R^4 (Delaunay
triangulations of lens spaces), predicted from continued fractions,
certified by explicit supporting hyperplanes and checked by brute force."""

from .certify import (CertificateReport, SupportForm, certify_pair, certify_triangulation,
                      det_M, level_curve_check, lattice_points_check, sine_ratio_less, support_form,
                      verify_inequalities)
from .group import (Degeneracy, GroupSpec, LatticeData, OrbitPoint, TorusPoint, canonicalize,
                    lattice_data, orbit)
from .hull_oracle import HullResult, OracleFacet, compare, hull
from .predictor import Degenerate, Facet, FacetKind, Triangulation, predict, predicted_facet_count
from .rationals import (ContinuedFraction, ExcludedSlope, FareyPair, Fraction, InvariantViolation,
                        continued_fraction, derive_invariants, enumerate_pairs, wedge)

__version__ = "0.1.0"
