"""Exact counting and structure of compositions with proportional part bounds."""

__version__ = "0.1.0"

from .alpha import AlphaSystem, Composition, format_alpha, is_communal, parse_alpha, validate_alpha
from .counting import (SlackValue, count, enumerate_bijective, enumerate_oracle,
                       multiset_count, slack)
from .errors import (ArityMismatch, BadShape, CapExceeded, CommunalError, InvalidAlpha,
                     InvalidTuple, NotCommunal, OutOfValidatedRange, PartnerSumExceeded,
                     ResultTooLarge, ScanCapExceeded, TrivialSystem, ValidationFailed)
from .genfun import (RationalGF, build_gf, closed_form_andrews, closed_form_half_half_n,
                     gf_equal, series)
from .monoid import (BaseElement, Decomposition, GeneratorSet, base_set, decompose,
                     generators, recompose, weight)
from .quasipoly import QuasiPolynomial, eval_quasipoly, extract_quasipoly
