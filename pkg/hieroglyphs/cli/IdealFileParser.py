"""
Parser for ideal files.

An ideal file declares the ring (with optional grid cells), the term
order, an optional grading and the generators::

    # 2x2 minors
    ring x11@0,1,1 x12@0,1,2 x21@0,2,1 x22@0,2,2;
    order lex x11, x12, x21, x22;
    grading 2: x11 = [1,0] x12 = [1,0] x21 = [0,1] x22 = [0,1];
    gens x11*x22 - x12*x21;

Whitespace is free and ``#`` starts a comment running to the end of the
line. Without a grading block every variable has degree 1. The order must
list every declared variable.
"""
import logging
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional, Tuple

import ply.lex as lex
import ply.yacc as yacc

from ..core.Errors import DuplicateVariable, IdealFileSyntaxError, IncompleteOrder, NonPositiveGrading
from ..core.Grading import Grading
from ..core.Monomial import Monomial
from ..core.Polynomial import Polynomial
from ..core.PolynomialRing import PolynomialRing
from ..core.TermOrder import OrderKind, TermOrder
from ..core.Variable import GridCell
from ..groebner.Ideal import Ideal

log = logging.getLogger(__name__)

# Raw term: coefficient and (name, exponent) factors in source order.
RawTerm = Tuple[Fraction, List[Tuple[str, int]]]


class IdealFile(NamedTuple):
    ring: PolynomialRing
    grading: Grading
    order: TermOrder
    ideal: Ideal


class IdealFileParser:
    """
    PLY lexer and LALR parser for the ideal-file grammar.

    One instance can parse any number of files.
    """

    reserved = {
        'ring': 'RING',
        'order': 'ORDER',
        'lex': 'LEX',
        'grevlex': 'GREVLEX',
        'grading': 'GRADING',
        'gens': 'GENS',
    }

    tokens = (
        'IDENT', 'INT',
        'AT', 'COMMA', 'SEMI', 'COLON', 'EQUALS', 'LBRACKET', 'RBRACKET',
        'PLUS', 'MINUS', 'TIMES', 'SLASH', 'CARET',
    ) + tuple(reserved.values())

    # Tokens

    t_AT = r'@'
    t_COMMA = r','
    t_SEMI = r';'
    t_COLON = r':'
    t_EQUALS = r'='
    t_LBRACKET = r'\['
    t_RBRACKET = r'\]'
    t_PLUS = r'\+'
    t_MINUS = r'-'
    t_TIMES = r'\*'
    t_SLASH = r'/'
    t_CARET = r'\^'

    t_ignore = ' \t\r'
    t_ignore_COMMENT = r'\#[^\n]*'

    def t_IDENT(self, t):
        r'[A-Za-z_][A-Za-z0-9_]*(~[1-9][0-9]*)?'
        t.type = self.reserved.get(t.value, 'IDENT')
        return t

    def t_INT(self, t):
        r'[0-9]+'
        t.value = int(t.value)
        return t

    def t_newline(self, t):
        r'\n+'
        t.lexer.lineno += len(t.value)

    def t_error(self, t):
        raise IdealFileSyntaxError(f"Illegal character {t.value[0]!r}",
                                   t.lexer.lineno, self._column(t.lexpos))

    # Parsing rules

    def p_file(self, p):
        'file : ring_decl order_decl grading_opt gens_decl'
        p[0] = (p[1], p[2], p[3], p[4])

    def p_ring_decl(self, p):
        'ring_decl : RING var_items SEMI'
        p[0] = p[2]

    def p_var_items(self, p):
        '''var_items : var_item
                     | var_items var_item'''
        p[0] = [p[1]] if len(p) == 2 else p[1] + [p[2]]

    def p_var_item(self, p):
        '''var_item : IDENT
                    | IDENT AT INT COMMA INT COMMA INT'''
        grid = GridCell(p[3], p[5], p[7]) if len(p) == 8 else None
        p[0] = (p[1], grid)

    def p_order_decl(self, p):
        'order_decl : ORDER order_kind ident_list SEMI'
        p[0] = (p[2], p[3])

    def p_order_kind(self, p):
        '''order_kind : LEX
                      | GREVLEX'''
        p[0] = OrderKind(p[1])

    def p_ident_list(self, p):
        '''ident_list : IDENT
                      | ident_list COMMA IDENT'''
        p[0] = [p[1]] if len(p) == 2 else p[1] + [p[3]]

    def p_grading_opt(self, p):
        '''grading_opt : GRADING INT COLON weight_items SEMI
                       | empty'''
        p[0] = (p[2], p[4]) if len(p) == 6 else None

    def p_weight_items(self, p):
        '''weight_items : weight_item
                        | weight_items weight_item'''
        p[0] = [p[1]] if len(p) == 2 else p[1] + [p[2]]

    def p_weight_item(self, p):
        'weight_item : IDENT EQUALS LBRACKET int_list RBRACKET'
        p[0] = (p[1], p[4])

    def p_int_list(self, p):
        '''int_list : INT
                    | int_list COMMA INT'''
        p[0] = [p[1]] if len(p) == 2 else p[1] + [p[3]]

    def p_gens_decl(self, p):
        '''gens_decl : GENS poly_list SEMI
                     | GENS SEMI'''
        p[0] = p[2] if len(p) == 4 else []

    def p_poly_list(self, p):
        '''poly_list : poly
                     | poly_list COMMA poly'''
        p[0] = [p[1]] if len(p) == 2 else p[1] + [p[3]]

    def p_poly_first(self, p):
        '''poly : term
                | PLUS term
                | MINUS term'''
        if len(p) == 2:
            p[0] = [p[1]]
        else:
            coefficient, factors = p[2]
            p[0] = [(-coefficient if p[1] == '-' else coefficient, factors)]

    def p_poly_more(self, p):
        '''poly : poly PLUS term
                | poly MINUS term'''
        coefficient, factors = p[3]
        p[0] = p[1] + [(-coefficient if p[2] == '-' else coefficient, factors)]

    def p_term(self, p):
        '''term : factors
                | rational TIMES factors
                | rational'''
        if len(p) == 4:
            p[0] = (p[1], p[3])
        elif isinstance(p[1], Fraction):
            p[0] = (p[1], [])
        else:
            p[0] = (Fraction(1), p[1])

    def p_rational(self, p):
        '''rational : INT
                    | INT SLASH INT'''
        if len(p) == 2:
            p[0] = Fraction(p[1])
        else:
            if p[3] == 0:
                raise IdealFileSyntaxError("Zero denominator", p.lineno(3), self._column(p.lexpos(3)))
            p[0] = Fraction(p[1], p[3])

    def p_factors(self, p):
        '''factors : factor
                   | factors TIMES factor'''
        p[0] = [p[1]] if len(p) == 2 else p[1] + [p[3]]

    def p_factor(self, p):
        '''factor : IDENT
                  | IDENT CARET INT'''
        p[0] = (p[1], p[3] if len(p) == 4 else 1)

    def p_empty(self, p):
        'empty :'
        p[0] = None

    def p_error(self, t):
        if t is None:
            line = self._text.count("\n") + 1
            raise IdealFileSyntaxError("Unexpected end of input", line, self._column(len(self._text)))
        raise IdealFileSyntaxError(f"Unexpected {t.value!r}", t.lineno, self._column(t.lexpos))

    def __init__(self):
        self._text = ""
        self.lexer = lex.lex(module=self)
        self.parser = yacc.yacc(module=self, start='file', write_tables=False, debug=False,
                                errorlog=yacc.NullLogger())

    def _column(self, position: int) -> int:
        return position - self._text.rfind("\n", 0, position)

    def parse(self, text: str) -> IdealFile:
        """
        Parse the text of an ideal file.

        Args:
            text: File contents

        Returns:
            IdealFile of (ring, grading, order, ideal)

        Raises:
            IdealFileSyntaxError: If the text does not follow the grammar
            DuplicateVariable: If a variable is declared twice
            UndeclaredVariable: If a name is used but not declared
            NonPositiveGrading: If a weight is missing, zero or of the wrong length
            IncompleteOrder: If the order does not list every variable once
        """
        self._text = text
        self.lexer.lineno = 1
        variables, (kind, reading), grading_block, polys = self.parser.parse(text, lexer=self.lexer)

        names = [name for name, _ in variables]
        ring = PolynomialRing.from_names(names, [grid for _, grid in variables])
        reading_ids = tuple(ring.index(name) for name in reading)
        if len(reading_ids) != ring.nvars:
            missing = [v.name for v in ring.variables if v.id not in reading_ids]
            raise IncompleteOrder(f"Order does not list {', '.join(missing) or 'each variable once'}")
        order = TermOrder(kind, reading_ids)
        grading = self._grading(ring, grading_block)
        ideal = Ideal(ring, [self._polynomial(ring, terms) for terms in polys])
        log.debug("parsed ideal file: %d variables, %d generators", ring.nvars, len(ideal))
        return IdealFile(ring, grading, order, ideal)

    @staticmethod
    def _grading(ring: PolynomialRing, block: Optional[Tuple[int, list]]) -> Grading:
        if block is None:
            return Grading.standard(ring.nvars)
        dim, items = block
        weights: Dict[int, List[int]] = {}
        for name, weight in items:
            var_id = ring.index(name)
            if var_id in weights:
                raise DuplicateVariable(f"Weight of {name} given twice")
            weights[var_id] = weight
        missing = [v.name for v in ring.variables if v.id not in weights]
        if missing:
            raise NonPositiveGrading(f"No weight given for {', '.join(missing)}")
        return Grading([weights[i] for i in range(ring.nvars)], dim=dim)

    @staticmethod
    def _polynomial(ring: PolynomialRing, terms: List[RawTerm]) -> Polynomial:
        result = []
        for coefficient, factors in terms:
            support: Dict[int, int] = {}
            for name, power in factors:
                var_id = ring.index(name)
                support[var_id] = support.get(var_id, 0) + power
            result.append((coefficient, Monomial.from_support(ring.nvars, support)))
        return Polynomial.from_terms(ring.nvars, result)


def parse_ideal_file(text: str) -> IdealFile:
    """Parse ideal-file text into (ring, grading, order, ideal)."""
    return IdealFileParser().parse(text)


def read_ideal_file(filename: str) -> IdealFile:
    with open(filename, encoding="utf-8") as handle:
        return parse_ideal_file(handle.read())
