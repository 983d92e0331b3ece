"""Exact Sturmian words, their fixing morphisms and the trees that index them."""
from .errors import (
    AmbiguousRhoError, ClassificationError, ConjugationError, DomainError, FieldMismatchError,
    NoFixedPointError, NotFoundError, NotInMonoidError, NotProlongableError, ResourceError,
    SturmkitError,
)
from .exactnum import (
    ContinuedFraction, QuadraticNumber, SturmForm, ceil_of, cf_sturm_form, compare, conjugate,
    continued_fraction, floor_of, is_sturm_number, parse_quadratic, yasutomi_invariant,
)
from .words import (
    LozengeReport, characteristic, differing_positions, factor_complexity, lozenge_index,
    lozenge_report, prepend_pair, rotation_word, sturmian_ceil, sturmian_floor,
)
from .morphisms import (
    E, GENERATORS, ID, PHI0, PHI1, PSI, BinaryMorphism, GeneratorWord, apply, compose,
    conjugation_preimage, decompose, ends_in_zero, exchange_conjugate, fixed_point,
    incidence_matrix, is_fixed_by, parse_morphism, psi_conjugate, remark1_coding, star,
    time_reversal,
)
from .solver import FixedPointSolution, FracLinMap, compose_maps, elementary_map, fixed_point_solve
from .trees import (
    export_tree, kepler_level, kepler_value, locate_fraction, matrix_at, morphism_at,
    sturm_number_at, tree38_morphism_at,
)
from .search import FixingResult, find_fixing_morphism

__version__ = "0.1.0"
