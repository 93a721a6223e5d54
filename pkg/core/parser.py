"""
Parser for the constraint DSL.

    universe: a b c d e f g
    sets: X Y Z
    X \\ Y = {a, d}      # expands to one Difference per listed element
    c !in X
    e in Z

Line-oriented; '#' starts a comment. The 'universe:' and 'sets:' headers
each appear exactly once, in that order, before any constraint line.
Every failure is a ParseError with a 1-based line and column.
"""

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from utils import get_logger
from .errors import ParseError
from .models import Difference, Exclusion, Inclusion, SCPInstance

logger = get_logger(__name__)

IDENT = 'IDENT'
NOTIN = 'NOTIN'
COLON = 'COLON'
BACKSLASH = 'BACKSLASH'
EQUALS = 'EQUALS'
LBRACE = 'LBRACE'
RBRACE = 'RBRACE'
COMMA = 'COMMA'

_TOKEN_PATTERN = re.compile(
    r'(?P<SPACE>\s+)'
    r'|(?P<NOTIN>!in\b)'
    r'|(?P<IDENT>\w+)'
    r'|(?P<COLON>:)'
    r'|(?P<BACKSLASH>\\)'
    r'|(?P<EQUALS>=)'
    r'|(?P<LBRACE>\{)'
    r'|(?P<RBRACE>\})'
    r'|(?P<COMMA>,)'
)

_DESCRIPTIONS = {
    IDENT: 'identifier',
    NOTIN: "'!in'",
    COLON: "':'",
    BACKSLASH: "'\\'",
    EQUALS: "'='",
    LBRACE: "'{'",
    RBRACE: "'}'",
    COMMA: "','",
}

UNIVERSE_HEADER = 'universe'
SETS_HEADER = 'sets'
IN_KEYWORD = 'in'


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


def tokenize_line(text: str, line: int) -> List[Token]:
    """
    Split one comment-free line into tokens.

    Raises:
        ParseError: On a character that starts no token
    """
    tokens = []
    position = 0
    while position < len(text):
        match = _TOKEN_PATTERN.match(text, position)
        if match is None:
            raise ParseError(f"unexpected character {text[position]!r}", line, position + 1)
        kind = match.lastgroup
        if kind != 'SPACE':
            tokens.append(Token(kind, match.group(), line, position + 1))
        position = match.end()
    return tokens


class _LineCursor:
    """Walks the tokens of a single line, reporting errors at the right column."""

    def __init__(self, tokens: List[Token], line: int, end_column: int):
        self.tokens = tokens
        self.line = line
        self.end_column = end_column
        self.index = 0

    def peek(self) -> Optional[Token]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def error(self, message: str, token: Optional[Token] = None) -> ParseError:
        token = token if token is not None else self.peek()
        column = token.column if token is not None else self.end_column
        return ParseError(message, self.line, column)

    def expect(self, kind: str, what: Optional[str] = None) -> Token:
        token = self.peek()
        if token is None or token.kind != kind:
            found = f"'{token.text}'" if token is not None else 'end of line'
            raise self.error(f"expected {what or _DESCRIPTIONS[kind]}, found {found}")
        self.index += 1
        return token

    def expect_end(self):
        token = self.peek()
        if token is not None:
            raise self.error(f"unexpected '{token.text}' after end of constraint")


class SCPParser:
    """
    Parses one DSL document into an SCPInstance.

    The parser checks everything that can be checked with a source
    position: duplicate declarations, names declared as both element and
    set, unknown identifiers and self-differences.
    """

    def __init__(self, source: str):
        self.source = source
        self.universe: Optional[List[str]] = None
        self.sets: Optional[List[str]] = None
        self.constraints: List[Union[Inclusion, Exclusion, Difference]] = []
        self._element_index: Dict[str, int] = {}
        self._set_index: Dict[str, int] = {}

    def parse(self) -> SCPInstance:
        lines = self.source.splitlines()
        for line_number, raw in enumerate(lines, start=1):
            text = raw.split('#', 1)[0]
            tokens = tokenize_line(text, line_number)
            if not tokens:
                continue
            cursor = _LineCursor(tokens, line_number, len(text.rstrip()) + 1)
            if len(tokens) >= 2 and tokens[0].kind == IDENT and tokens[1].kind == COLON:
                self._parse_header(cursor)
            else:
                self._parse_constraint(cursor)

        end_line = len(lines) + 1
        if self.universe is None:
            raise ParseError("missing 'universe:' header", end_line, 1)
        if self.sets is None:
            raise ParseError("missing 'sets:' header", end_line, 1)

        return SCPInstance(tuple(self.universe), tuple(self.sets), tuple(self.constraints))

    # ============================================
    # Headers
    # ============================================
    def _parse_header(self, cursor: _LineCursor):
        name_token = cursor.expect(IDENT)
        cursor.expect(COLON)

        if name_token.text == UNIVERSE_HEADER:
            if self.universe is not None:
                raise cursor.error("duplicate 'universe:' header", name_token)
            if self.sets is not None:
                raise cursor.error("'universe:' header must come before 'sets:'", name_token)
            self.universe = self._parse_declarations(cursor, 'element', self._element_index)
        elif name_token.text == SETS_HEADER:
            if self.sets is not None:
                raise cursor.error("duplicate 'sets:' header", name_token)
            if self.universe is None:
                raise cursor.error("'sets:' header must come after 'universe:'", name_token)
            self.sets = self._parse_declarations(cursor, 'set', self._set_index)
        else:
            raise cursor.error(f"unknown header '{name_token.text}:'", name_token)

    def _parse_declarations(self, cursor: _LineCursor, kind: str, index: Dict[str, int]) -> List[str]:
        names = []
        while cursor.peek() is not None:
            token = cursor.expect(IDENT, f"{kind} name")
            if token.text in index:
                raise cursor.error(f"duplicate {kind} '{token.text}'", token)
            if kind == 'set' and token.text in self._element_index:
                raise cursor.error(
                    f"identifier '{token.text}' is declared as both an element and a set", token)
            index[token.text] = len(names)
            names.append(token.text)

        if not names:
            raise cursor.error(f"'{kind}' declaration list is empty; declare at least one {kind}")
        return names

    # ============================================
    # Constraint lines
    # ============================================
    def _parse_constraint(self, cursor: _LineCursor):
        if self.sets is None:
            raise cursor.error("constraint line before the 'sets:' header")

        first = cursor.expect(IDENT)
        operator = cursor.peek()

        if operator is not None and operator.kind == IDENT and operator.text == IN_KEYWORD:
            cursor.index += 1
            set_token = cursor.expect(IDENT, 'set name')
            cursor.expect_end()
            self._check_element(cursor, first)
            self._check_set(cursor, set_token)
            self.constraints.append(Inclusion(first.text, set_token.text))

        elif operator is not None and operator.kind == NOTIN:
            cursor.index += 1
            set_token = cursor.expect(IDENT, 'set name')
            cursor.expect_end()
            self._check_element(cursor, first)
            self._check_set(cursor, set_token)
            self.constraints.append(Exclusion(first.text, set_token.text))

        elif operator is not None and operator.kind == BACKSLASH:
            cursor.index += 1
            self._parse_difference(cursor, first)

        else:
            raise cursor.error("expected 'in', '!in' or '\\' after identifier", operator)

    def _parse_difference(self, cursor: _LineCursor, in_set: Token):
        self._check_set(cursor, in_set)
        not_in_set = cursor.expect(IDENT, 'set name')
        self._check_set(cursor, not_in_set)
        if not_in_set.text == in_set.text:
            raise cursor.error(
                f"self-difference '{in_set.text} \\ {not_in_set.text}' is not allowed", not_in_set)

        cursor.expect(EQUALS)
        cursor.expect(LBRACE)

        elements = []
        if cursor.peek() is not None and cursor.peek().kind == RBRACE:
            cursor.index += 1
        else:
            while True:
                element = cursor.expect(IDENT, 'element name')
                self._check_element(cursor, element)
                elements.append(element.text)
                separator = cursor.peek()
                if separator is not None and separator.kind == COMMA:
                    cursor.index += 1
                    continue
                cursor.expect(RBRACE, "',' or '}'")
                break
        cursor.expect_end()

        for element in elements:
            self.constraints.append(Difference(element, in_set.text, not_in_set.text))

    def _check_element(self, cursor: _LineCursor, token: Token):
        if token.text not in self._element_index:
            raise cursor.error(f"unknown element '{token.text}'", token)

    def _check_set(self, cursor: _LineCursor, token: Token):
        if token.text not in self._set_index:
            raise cursor.error(f"unknown set '{token.text}'", token)


def parse_scp(source: str) -> SCPInstance:
    """
    Parse a DSL document into an instance.

    Args:
        source: Complete document text

    Returns:
        SCPInstance in declaration order, set-valued difference lines expanded

    Raises:
        ParseError: With line and column of the first problem
    """
    instance = SCPParser(source).parse()
    logger.debug(f"Parsed {instance}")
    return instance


def load_scp(path: Union[str, Path]) -> SCPInstance:
    """
    Read a UTF-8 DSL file and parse it.

    Raises:
        OSError: If the file cannot be read
        ParseError: If the file is not valid UTF-8 (positioned at the first
            bad byte, column counted in bytes) or does not parse
    """
    path = Path(path)
    data = path.read_bytes()
    try:
        source = data.decode('utf-8')
    except UnicodeDecodeError as e:
        line_start = data.rfind(b'\n', 0, e.start) + 1
        raise ParseError(
            f"invalid UTF-8 byte 0x{data[e.start]:02x}",
            data.count(b'\n', 0, e.start) + 1,
            e.start - line_start + 1,
        ) from None
    instance = parse_scp(source)
    logger.info(f"Loaded {path}: {instance}")
    return instance


def render_scp(instance: SCPInstance) -> str:
    """
    Render an instance back to DSL text.

    Consecutive Difference constraints over the same pair of sets are
    grouped into one set-valued line, so re-parsing yields the same
    constraint list in the same order.
    """
    lines = [
        f"universe: {' '.join(instance.universe)}",
        f"sets: {' '.join(instance.sets)}",
    ]

    group_key: Optional[Tuple[str, str]] = None
    group: List[str] = []

    def flush():
        if group_key is not None:
            lines.append(f"{group_key[0]} \\ {group_key[1]} = {{{', '.join(group)}}}")

    for constraint in instance.constraints:
        if isinstance(constraint, Difference):
            key = (constraint.in_set, constraint.not_in_set)
            if key != group_key:
                flush()
                group_key, group = key, []
            group.append(constraint.element)
            continue

        flush()
        group_key, group = None, []
        lines.append(str(constraint))

    flush()
    return "\n".join(lines) + "\n"
