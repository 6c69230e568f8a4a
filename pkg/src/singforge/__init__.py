"""Mixed polynomials with weakly isolated singularities built from symmetric braids."""

__version__ = "0.1.0"

from .braid import BraidWord, GeometricBraid, detect_symmetry, from_word, nest, same_invariants, to_word
from .certificate import Certificate
from .looppoly import LoopPoly, arg_speed, from_braid, simple_root_margin, track
from .mixedpoly import MixedPoly, WeightVector, face_function, from_loop, g_polynomial, glue, newton
from .nondegeneracy import check_inner_nondegenerate, check_strongly_inner_nondegenerate
from .obstruction import IntLaurentPoly, hartley_check, murasugi_check, symmetry_report
from .pfibered import PFiberData, certify, proposition_T, realize, verify_compatible
from .trigpoly import TrigPoly

__all__ = [
    "BraidWord", "GeometricBraid", "detect_symmetry", "from_word", "nest", "same_invariants", "to_word",
    "Certificate", "LoopPoly", "arg_speed", "from_braid", "simple_root_margin", "track",
    "MixedPoly", "WeightVector", "face_function", "from_loop", "g_polynomial", "glue", "newton",
    "check_inner_nondegenerate", "check_strongly_inner_nondegenerate",
    "IntLaurentPoly", "hartley_check", "murasugi_check", "symmetry_report",
    "PFiberData", "certify", "proposition_T", "realize", "verify_compatible", "TrigPoly",
]
