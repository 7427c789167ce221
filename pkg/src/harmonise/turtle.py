"""Reader for the subset of Turtle used by vocabulary snapshots.

Supported: ``@prefix``/``PREFIX``, absolute ``<IRI>``, prefixed names, ``a``,
``;`` and ``,`` lists, ``_:label`` blank nodes, short and long string
literals with escapes, ``^^`` datatypes, ``@lang`` tags, bare numbers and
booleans, and ``#`` comments. N-Triples input is a subset of this and parses
too.

Not supported, reported as ``unsupported-construct``: ``@base``/``BASE``,
relative IRIs, ``[ ]`` blank-node property lists and ``( )`` collections.

Parsing stops at the first problem and raises :class:`TurtleParseError`,
whose ``diagnostic`` points at the offending character.
"""

import re
from dataclasses import dataclass

from .errors import BadPrefix, HarmoniseError, InvalidIri, InvalidTerm, UnboundPrefix
from .rdf import IRI, BlankNode, Graph, Literal, NamespaceMap, Triple, bind
from .vocab import RDF_TYPE, XSD_BOOLEAN, XSD_DECIMAL, XSD_DOUBLE, XSD_INTEGER

__all__ = ["ParseDiagnostic", "TurtleParseError", "Token", "tokenize", "parse_turtle"]

SYNTAX = "syntax"
UNBOUND_PREFIX = "unbound-prefix"
BAD_LITERAL = "bad-literal"
UNSUPPORTED = "unsupported-construct"


@dataclass(frozen=True)
class ParseDiagnostic:
    line: int
    column: int
    message: str
    kind: str

    def __str__(self):
        return f"{self.line}:{self.column}: {self.kind}: {self.message}"


class TurtleParseError(HarmoniseError):
    def __init__(self, diagnostic):
        self.diagnostic = diagnostic
        super().__init__(str(diagnostic))

    @property
    def line(self):
        return self.diagnostic.line

    @property
    def column(self):
        return self.diagnostic.column

    @property
    def kind(self):
        return self.diagnostic.kind


@dataclass(frozen=True, slots=True)
class Token:
    """A lexical token.

    ``kind`` is one of IRIREF, PNAME_NS, PNAME_LN, BNODE, STRING, INTEGER,
    DECIMAL, DOUBLE, BOOLEAN, LANGTAG, DTYPE, A, PREFIX, BASE, PUNCT, EOF.
    For PNAME_* ``value`` is ``(prefix, local)``; for strings it is the
    decoded text; for numbers the lexical form verbatim.
    """

    kind: str
    value: object
    line: int
    column: int


_ECHAR = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}
_LOCAL_ESC = set("_~.-!$&'()*+,;=/?#@%")
_NUMBER_RE = re.compile(
    r"[+-]?(?:"
    r"(?P<dbl>(?:[0-9]+\.[0-9]*|\.[0-9]+|[0-9]+)[eE][+-]?[0-9]+)"
    r"|(?P<dec>[0-9]*\.[0-9]+)"
    r"|(?P<int>[0-9]+))"
)
_LANG_RE = re.compile(r"[A-Za-z]+(?:-[A-Za-z0-9]+)*")
_PUNCT = set(".;,[]()")


def _is_pn_chars_base(ch):
    return ch.isalpha() or (ord(ch) > 0x7F and ch.isidentifier())


def _is_pn_chars(ch):
    return _is_pn_chars_base(ch) or ch.isdigit() or ch in "_-" or ch == "·"


class _Lexer:
    def __init__(self, text):
        self.text = text
        self.pos = 0
        self.line = 1
        self.line_start = 0
        self.last_end = -1
        self.last_kind = None

    def where(self, pos=None):
        pos = self.pos if pos is None else pos
        # line_start tracks the current line; errors are only raised on it
        return self.line, pos - self.line_start + 1

    def fail(self, message, kind=SYNTAX, pos=None):
        line, col = self._locate(self.pos if pos is None else pos)
        raise TurtleParseError(ParseDiagnostic(line, col, message, kind))

    def _locate(self, pos):
        line = self.text.count("\n", 0, pos) + 1
        start = self.text.rfind("\n", 0, pos) + 1
        return line, pos - start + 1

    def _skip(self):
        text, n = self.text, len(self.text)
        while self.pos < n:
            ch = text[self.pos]
            if ch == "\n":
                self.pos += 1
                self.line += 1
                self.line_start = self.pos
            elif ch in " \t\r":
                self.pos += 1
            elif ch == "#":
                nl = text.find("\n", self.pos)
                self.pos = n if nl < 0 else nl
            else:
                break

    def tokens(self):
        text, n = self.text, len(self.text)
        while True:
            self._skip()
            if self.pos >= n:
                line, col = self.where()
                yield Token("EOF", None, line, col)
                return
            start = self.pos
            line, col = self.where()
            tok = self._next(start)
            # long strings may span lines; resync the line bookkeeping
            nl = text.count("\n", start, self.pos)
            if nl:
                self.line += nl
                self.line_start = text.rfind("\n", start, self.pos) + 1
            self.last_end = self.pos
            self.last_kind = tok[0]
            yield Token(tok[0], tok[1], line, col)

    def _next(self, start):
        text = self.text
        ch = text[start]
        if ch == "<":
            return "IRIREF", self._iriref(start)
        if ch in "\"'":
            return "STRING", self._string(start)
        if ch == "@":
            word_end = start + 1
            while word_end < len(text) and (text[word_end].isalnum() or text[word_end] == "-"):
                word_end += 1
            word = text[start + 1:word_end]
            if self.last_kind == "STRING" and self.last_end == start:
                if not word or not _LANG_RE.fullmatch(word):
                    self.fail("malformed language tag", BAD_LITERAL, start)
                self.pos = word_end
                return "LANGTAG", word
            if word == "prefix":
                self.pos = word_end
                return "PREFIX", "@prefix"
            if word == "base":
                self.pos = word_end
                return "BASE", "@base"
            self.fail(f"unexpected directive or language tag '@{word}'", SYNTAX, start)
        if ch == "^":
            if text.startswith("^^", start):
                self.pos = start + 2
                return "DTYPE", "^^"
            self.fail("expected '^^'", SYNTAX, start)
        if ch == "_" and text.startswith("_:", start):
            return "BNODE", self._bnode(start)
        if ch.isdigit() or (ch in "+-." and start + 1 < len(text) and (text[start + 1].isdigit() or (
                ch != "." and text[start + 1] == "." and start + 2 < len(text) and text[start + 2].isdigit()))):
            m = _NUMBER_RE.match(text, start)
            if m:
                self.pos = m.end()
                kind = "DOUBLE" if m.group("dbl") else "DECIMAL" if m.group("dec") else "INTEGER"
                return kind, m.group(0)
        if ch in _PUNCT:
            self.pos = start + 1
            return "PUNCT", ch
        if ch == ":" or _is_pn_chars_base(ch):
            return self._name(start)
        self.fail(f"unexpected character {ch!r}", SYNTAX, start)

    def _iriref(self, start):
        text, i, out = self.text, start + 1, []
        while True:
            if i >= len(text):
                self.fail("unterminated IRI", SYNTAX, start)
            ch = text[i]
            if ch == ">":
                break
            if ch == "\\":
                if text.startswith("\\u", i) or text.startswith("\\U", i):
                    width = 4 if text[i + 1] == "u" else 8
                    out.append(self._hex(i, width))
                    i += 2 + width
                    continue
                self.fail("illegal escape in IRI", SYNTAX, i)
            if ch.isspace() or ch in '<"{}|^`':
                self.fail(f"illegal character {ch!r} in IRI", SYNTAX, i)
            out.append(ch)
            i += 1
        self.pos = i + 1
        return "".join(out)

    def _hex(self, at, width):
        digits = self.text[at + 2:at + 2 + width]
        if len(digits) != width or any(c not in "0123456789abcdefABCDEF" for c in digits):
            self.fail("malformed \\u escape", BAD_LITERAL, at)
        cp = int(digits, 16)
        if cp > 0x10FFFF or 0xD800 <= cp <= 0xDFFF:
            self.fail(f"escape \\u{digits} is not a Unicode scalar value", BAD_LITERAL, at)
        return chr(cp)

    def _string(self, start):
        text = self.text
        q = text[start]
        long = text.startswith(q * 3, start)
        delim = q * 3 if long else q
        i = start + len(delim)
        out = []
        while True:
            if i >= len(text):
                self.fail("unterminated string literal", BAD_LITERAL, start)
            if text.startswith(delim, i):
                # a long string may end with extra quotes that belong to the content
                if long:
                    while text.startswith(q, i + 3):
                        out.append(q)
                        i += 1
                break
            ch = text[i]
            if ch == "\\":
                nxt = text[i + 1:i + 2]
                if nxt in ("u", "U"):
                    width = 4 if nxt == "u" else 8
                    out.append(self._hex(i, width))
                    i += 2 + width
                    continue
                if nxt in _ECHAR:
                    out.append(_ECHAR[nxt])
                    i += 2
                    continue
                self.fail("illegal escape in string literal", BAD_LITERAL, i)
            if not long and ch in "\r\n":
                self.fail("line break in short string literal", BAD_LITERAL, i)
            out.append(ch)
            i += 1
        self.pos = i + len(delim)
        return "".join(out)

    def _bnode(self, start):
        text, i = self.text, start + 2
        j = i
        while j < len(text) and (_is_pn_chars(text[j]) or text[j] == "."):
            j += 1
        while j > i and text[j - 1] == ".":
            j -= 1
        label = text[i:j]
        if not label:
            self.fail("empty blank node label", SYNTAX, start)
        self.pos = j
        return label

    def _name(self, start):
        text, i = self.text, start
        while i < len(text) and (_is_pn_chars(text[i]) or text[i] == "."):
            i += 1
        word = text[start:i]
        if i < len(text) and text[i] == ":":
            prefix = word
            if prefix.endswith("."):
                self.fail("prefix may not end with '.'", SYNTAX, i - 1)
            local, end = self._local(i + 1)
            self.pos = end
            if local is None:
                return "PNAME_NS", (prefix, "")
            return "PNAME_LN", (prefix, local)
        while word.endswith("."):
            word = word[:-1]
            i -= 1
        self.pos = i
        if word == "a":
            return "A", "a"
        if word in ("true", "false"):
            return "BOOLEAN", word
        if word.upper() == "PREFIX":
            return "PREFIX", "PREFIX"
        if word.upper() == "BASE":
            return "BASE", "BASE"
        self.fail(f"unexpected bare word {word!r}", SYNTAX, start)

    def _local(self, i):
        text, out, start = self.text, [], i
        while i < len(text):
            ch = text[i]
            if _is_pn_chars(ch) or ch == ":" or ch == ".":
                out.append(ch)
                i += 1
            elif ch == "\\" and i + 1 < len(text) and text[i + 1] in _LOCAL_ESC:
                out.append(text[i + 1])
                i += 2
            elif ch == "%":
                hx = text[i + 1:i + 3]
                if len(hx) != 2 or any(c not in "0123456789abcdefABCDEF" for c in hx):
                    self.fail("malformed percent escape in local name", SYNTAX, i)
                out.append(text[i:i + 3])
                i += 3
            else:
                break
        # trailing dots terminate the statement, they are not part of the name
        while out and out[-1] == "." and text[i - 1] == ".":
            out.pop()
            i -= 1
        if i == start:
            return None, i
        return "".join(out), i


def tokenize(text):
    """Yield :class:`Token` objects, ending with an EOF token."""
    return _Lexer(text).tokens()


class _Parser:
    def __init__(self, text):
        self.lexer = _Lexer(text)
        self.stream = self.lexer.tokens()
        self.tok = next(self.stream)
        self.ns = NamespaceMap()
        self.triples = set()

    def advance(self):
        t = self.tok
        self.tok = next(self.stream)
        return t

    def fail(self, message, kind=SYNTAX, tok=None):
        tok = tok or self.tok
        raise TurtleParseError(ParseDiagnostic(tok.line, tok.column, message, kind))

    def expect_punct(self, ch):
        if self.tok.kind != "PUNCT" or self.tok.value != ch:
            self.fail(f"expected '{ch}', found {self._describe(self.tok)}")
        return self.advance()

    @staticmethod
    def _describe(tok):
        if tok.kind == "EOF":
            return "end of input"
        if tok.kind == "PUNCT":
            return f"'{tok.value}'"
        return tok.kind.lower()

    def parse(self):
        while self.tok.kind != "EOF":
            self.statement()
        return Graph(self.triples), self.ns

    def statement(self):
        tok = self.tok
        if tok.kind == "PREFIX":
            self.advance()
            ns_tok = self.advance()
            if ns_tok.kind != "PNAME_NS":
                self.fail("expected a prefix name like 'ex:'", tok=ns_tok)
            iri = self.iriref(self.advance())
            try:
                self.ns = bind(self.ns, ns_tok.value[0], iri)
            except BadPrefix as e:
                self.fail(str(e), SYNTAX, ns_tok)
            if tok.value == "@prefix":
                self.expect_punct(".")
            return
        if tok.kind == "BASE":
            self.fail("@base / BASE is not supported; use absolute IRIs", UNSUPPORTED)
        self.triples_statement()
        self.expect_punct(".")

    def iriref(self, tok):
        if tok.kind != "IRIREF":
            self.fail(f"expected an <IRI>, found {self._describe(tok)}", tok=tok)
        try:
            return IRI(tok.value)
        except InvalidIri as e:
            if e.reason in ("missing scheme", "empty IRI") or e.reason.startswith("malformed scheme"):
                self.fail(f"relative IRI <{tok.value}> is not supported", UNSUPPORTED, tok)
            self.fail(str(e), SYNTAX, tok)

    def iri(self, tok):
        if tok.kind == "IRIREF":
            return self.iriref(tok)
        if tok.kind in ("PNAME_LN", "PNAME_NS"):
            prefix, local = tok.value
            try:
                return self.ns.expand(f"{prefix}:{local}")
            except UnboundPrefix:
                self.fail(f"prefix {prefix!r} is not declared", UNBOUND_PREFIX, tok)
            except InvalidIri as e:
                self.fail(str(e), SYNTAX, tok)
        return None

    def _unsupported(self, tok):
        if tok.kind == "PUNCT" and tok.value == "[":
            self.fail("blank node property lists '[ ]' are not supported", UNSUPPORTED, tok)
        if tok.kind == "PUNCT" and tok.value == "(":
            self.fail("collections '( )' are not supported", UNSUPPORTED, tok)

    def bnode(self, tok):
        try:
            return BlankNode(tok.value)
        except InvalidTerm:
            self.fail(f"blank node label {tok.value!r} must match [A-Za-z0-9_]+", SYNTAX, tok)

    def subject(self):
        tok = self.advance()
        self._unsupported(tok)
        if tok.kind == "BNODE":
            return self.bnode(tok)
        iri = self.iri(tok)
        if iri is None:
            self.fail(f"expected a subject, found {self._describe(tok)}", tok=tok)
        return iri

    def verb(self):
        tok = self.advance()
        if tok.kind == "A":
            return RDF_TYPE
        iri = self.iri(tok)
        if iri is None:
            self.fail(f"expected a predicate, found {self._describe(tok)}", tok=tok)
        return iri

    def object(self):
        tok = self.advance()
        self._unsupported(tok)
        if tok.kind == "BNODE":
            return self.bnode(tok)
        if tok.kind == "STRING":
            return self.literal_tail(tok)
        if tok.kind == "INTEGER":
            return Literal(tok.value, XSD_INTEGER)
        if tok.kind == "DECIMAL":
            return Literal(tok.value, XSD_DECIMAL)
        if tok.kind == "DOUBLE":
            return Literal(tok.value, XSD_DOUBLE)
        if tok.kind == "BOOLEAN":
            return Literal(tok.value, XSD_BOOLEAN)
        iri = self.iri(tok)
        if iri is None:
            self.fail(f"expected an object, found {self._describe(tok)}", tok=tok)
        return iri

    def literal_tail(self, tok):
        if self.tok.kind == "LANGTAG":
            lang_tok = self.advance()
            try:
                return Literal(tok.value, lang=lang_tok.value)
            except InvalidTerm as e:
                self.fail(str(e), BAD_LITERAL, lang_tok)
        if self.tok.kind == "DTYPE":
            self.advance()
            dt_tok = self.advance()
            dt = self.iri(dt_tok)
            if dt is None:
                self.fail(f"expected a datatype IRI, found {self._describe(dt_tok)}", BAD_LITERAL, dt_tok)
            return Literal(tok.value, dt)
        return Literal(tok.value)

    def triples_statement(self):
        if self.tok.kind == "STRING" or self.tok.kind in ("INTEGER", "DECIMAL", "DOUBLE", "BOOLEAN"):
            self.fail("a literal cannot be a subject")
        s = self.subject()
        self.predicate_object_list(s)

    def predicate_object_list(self, s):
        while True:
            p = self.verb()
            while True:
                o = self.object()
                self.triples.add(Triple(s, p, o))
                if self.tok.kind == "PUNCT" and self.tok.value == ",":
                    self.advance()
                    continue
                break
            if not (self.tok.kind == "PUNCT" and self.tok.value == ";"):
                return
            while self.tok.kind == "PUNCT" and self.tok.value == ";":
                self.advance()
            if self.tok.kind == "PUNCT" and self.tok.value in ".]":
                return


def parse_turtle(text):
    """Parse Turtle ``text`` into ``(Graph, NamespaceMap)``.

    Raises :class:`TurtleParseError` on the first problem found.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    if text.startswith("\ufeff"):
        text = text[1:]
    return _Parser(text).parse()
