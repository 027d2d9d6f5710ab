"""Exact cylinder and horn DG rings over Z, semi-free lifting and horn filling."""
from .dgring import (BasisDGRing, BasisSymbol, CheckReport, DGRingHom, Element, check_axioms,
                     check_hom, compose_hom, identity_hom, integers, tensor, tensor_hom)
from .horn import (LimitRing, certify_surjective_quasi_iso, face_restriction, horn_nerve,
                   limit_ring, restriction_hom)
from .kan import Filler, HornDatum, IncompatibleHornError, assemble, boundary, fill
from .keller import decode_homotopy, encode_homotopy, keller_cyl, keller_to_cyl1
from .lifting import (CertificateError, LiftingError, homotopy_between_lifts, lift_boundary_in_kernel,
                      lift_cocycle, lift_hom)
from .nerve import NerveRing, cyl, induced_hom, nerve_ring
from .semifree import GradedVar, NCPoly, SemiFreeHom, SemiFreePresentation, check_sf_hom, extend_d
from .simplex import Delta, Horn, MonotoneMap, coface, codegeneracy, horn_diagram

__all__ = [
    "BasisDGRing", "BasisSymbol", "CheckReport", "DGRingHom", "Element", "check_axioms",
    "check_hom", "compose_hom", "identity_hom", "integers", "tensor", "tensor_hom",
    "LimitRing", "certify_surjective_quasi_iso", "face_restriction", "horn_nerve", "limit_ring",
    "restriction_hom", "Filler", "HornDatum", "IncompatibleHornError", "assemble", "boundary",
    "fill", "decode_homotopy", "encode_homotopy", "keller_cyl", "keller_to_cyl1",
    "CertificateError", "LiftingError", "homotopy_between_lifts", "lift_boundary_in_kernel",
    "lift_cocycle", "lift_hom", "NerveRing", "cyl", "induced_hom", "nerve_ring", "GradedVar",
    "NCPoly", "SemiFreeHom", "SemiFreePresentation", "check_sf_hom", "extend_d", "Delta", "Horn",
    "MonotoneMap", "coface", "codegeneracy", "horn_diagram",
]
