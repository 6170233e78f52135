"""Staircase-matrix Cauchy identities: serpentines, half-bubble-sort, DL-dense arrays,
key polynomials, Demazure atoms and exact per-degree verification."""

from .arrays import DLPoset, ShapeArray, dl_poset, enumerate_dl, hor, is_dl_dense, mobius, vrt
from .cauchy import (VerificationReport, agl_prime, agl_shape, lhs_degree, rhs_alternating,
                     rhs_left, rhs_right, vdk_char, verify, verify_agl, verify_vdk)
from .compositions import Composition, Partition, dominance_le, dominant_part, weight
from .permutations import (Permutation, bruhat_le, cherednik_le, min_coset_rep, reduced_word,
                           w0_reverse)
from .polynomials import (BigradedPolynomial, demazure_atom, demazure_pi, demazure_pibar,
                          key_polynomial, opposite_atom, opposite_key, schur)
from .serpentines import (half_bubble_sort, is_admissible, iterated_chain, serpentines,
                          sorted_serpentine)
from .shapes import (ScPoset, StaircaseShape, erase_hook, parse_shape, sc_le, staircase_corners,
                     transpose, validate)

__version__ = "0.1.0"
