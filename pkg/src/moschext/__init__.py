"""Moschovakis extensions of represented spaces.

The pair closure ``X*`` of a space with its name representation, the
combinatory spaces of single- and multi-valued partial functions on it, name
transformers realizing them, and the extension of effective topological and
metric structure to ``X*``.
"""

from .errors import (Diverges, DomainViolation, FuelExhausted, JoinMismatch, MalformedName,
                     MoschError, NotANatCode, QueryBudgetExceeded, RegularityViolation,
                     TermSyntaxError, Undefined, UnknownSymbol)
from .mosch_core import (O, BasePoint, MoschElem, Pair, code_to_nat, decode_seq, depth,
                         encode_seq, is_basic, is_pair, left, make_pair, nat_to_code, right,
                         universe)
from .names import CANTOR, Name, PairCode, pair_j, unpair_j
from .combinatory import S1, S2, Mfn2, Pfn1, compile_term, embed, eval_term
from .terms import format_elem, format_term, parse_elem, parse_term

__version__ = "0.1.0"

__all__ = [
    "MoschError", "Undefined", "Diverges", "RegularityViolation", "FuelExhausted",
    "NotANatCode", "MalformedName", "QueryBudgetExceeded", "UnknownSymbol", "TermSyntaxError",
    "DomainViolation", "JoinMismatch",
    "O", "BasePoint", "MoschElem", "Pair", "make_pair", "left", "right", "is_basic", "is_pair",
    "depth", "nat_to_code", "code_to_nat", "encode_seq", "decode_seq", "universe",
    "CANTOR", "Name", "PairCode", "pair_j", "unpair_j",
    "S1", "S2", "Pfn1", "Mfn2", "embed", "compile_term", "eval_term",
    "parse_term", "format_term", "parse_elem", "format_elem",
]
