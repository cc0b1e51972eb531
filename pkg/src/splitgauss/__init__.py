"""Exact-arithmetic toolkit for split classical groups: word-problem
decomposition over elementary generators, spinor norms, and z-class counts."""

from .field import (FieldCtx, FieldElement, SquareClass, arith, frobenius,
                    square_class, sqrt, trivial_class)
from .linalg import Matrix, paper_index
from .forms import (GroupKind, NotInGroupError, standard_form, similitude,
                    bilinear, quadratic, wall_gram, discriminant)
from .generators import (GeneratorToken, Word, x_token, w_token, elementary,
                         eval_word, w_pair, w_pair_matrix, torus_h, torus_word,
                         parse_word, format_word)
from .gauss import Decomposition, gl_eliminate, decompose, verify
from .spinor import (reflection, reflection_factor, spinor_elimination,
                     spinor_wall, spinor_reflect)
from .polyclass import (Poly, u_reciprocal, is_self_u_reciprocal, dual,
                        is_self_dual, enumerate_self_u_irreducibles)
from .zcount import (Partition, Series, partitions, partition_count, z_closed,
                     series, u_compact, u_lorentz)
from .rng import SplitMix64

__all__ = [name for name in dir() if not name.startswith("_")]
