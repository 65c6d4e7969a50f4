"""Exact computation of the Casson invariant from Torelli gluing words.

The invariant F of an integral homology sphere presented by a Heegaard gluing
word is recovered from the first Johnson homomorphism tau and the bilinear
cocycle J on the exterior cube of H_1; lambda = -F in the default convention.
"""
from .cocycle import (BilinearForm, cocycle_value, eval_J, eval_Jt, j_form, jt_form,
                      minus_id_homomorphism_obstruction, uniqueness_certificate)
from .engine import (AnnotatedWord, Block, LaurentPolynomial, alexander_from_seifert,
                     casson_surgery, connected_sum, eval_F, eval_lambda,
                     surgery_increment_series)
from .errors import CassonError
from .exterior import ExteriorCubeVector, WSplit, induced_action, w_split, wedge3
from .freegroup import Endo, FreeWord, magnus_identity_check, suzuki_generators
from .johnson import (BoundingPair, Conjugated, General, Separating, TwistWord, classify_side,
                      h1_action, is_torelli, lantern_check, stabilize, tau)
from .symplectic import (BlockPair, HomologyVector, SymplecticMatrix, coset_block_analysis,
                         decompose_spB, gl_embed, omega, transvection)

__version__ = "0.1.0"
