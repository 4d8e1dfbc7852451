"""有理函数表达式的词法, 语法与求值

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := atom ('^' ['-'] int)?
    atom   := '(' expr ')' | var | int | '-' factor

乘除与乘方保留用户写出的因式分解形式, 加减则丢弃.
"""

from re import compile
from dataclasses import dataclass

from ..algebra import Domain, FieldElem, FunctionField, ExtensionField, RationalFunction, NilpotentExtension
from ..constants import LINE_VARIABLE, EXTENSION_GENERATOR
from ..exception import AlgebraException, ZeroFunctionException, ExpressionSyntaxException

_TOKEN = compile(r"(?P<space>[ \t\r\n]+)|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()])")


@dataclass(frozen=True, slots=True)
class Span:
    line: int
    column: int
    """1 起"""
    end: int
    """源串中的结束偏移"""


@dataclass(frozen=True, slots=True)
class Token:
    kind: str
    text: str
    span: Span


@dataclass(frozen=True, slots=True)
class Num:
    value: int
    span: Span


@dataclass(frozen=True, slots=True)
class Var:
    name: str
    span: Span


@dataclass(frozen=True, slots=True)
class Neg:
    operand: "Node"
    span: Span


@dataclass(frozen=True, slots=True)
class BinOp:
    op: str
    """'+', '-', '*' 或 '/'"""
    left: "Node"
    right: "Node"
    span: Span


@dataclass(frozen=True, slots=True)
class Pow:
    base: "Node"
    exponent: int
    span: Span


Node = Num | Var | Neg | BinOp | Pow


def _span(src: str, start: int, end: int) -> Span:
    line = src.count("\n", 0, start) + 1
    column = start - src.rfind("\n", 0, start)
    return Span(line, column, end)


def tokenize(src: str) -> list[Token]:
    tokens: list[Token] = []
    pos = 0
    while pos < len(src):
        matched = _TOKEN.match(src, pos)
        if matched is None:
            span = _span(src, pos, pos + 1)
            raise ExpressionSyntaxException(f"unexpected character {src[pos]!r}", span.line, span.column)
        kind = matched.lastgroup or ""
        if kind != "space":
            tokens.append(Token(kind, matched.group(), _span(src, pos, matched.end())))
        pos = matched.end()
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = tokenize(src)
        self.index = 0

    def _error(self, message: str, token: Token | None = None):
        if token is None:
            span = _span(self.src, len(self.src), len(self.src))
            return ExpressionSyntaxException(f"{message}: unexpected end of input", span.line, span.column)
        return ExpressionSyntaxException(f"{message}: unexpected {token.text!r}", token.span.line, token.span.column)

    def _peek(self) -> Token | None:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _accept(self, *texts: str) -> Token | None:
        token = self._peek()
        if token is not None and token.kind == "op" and token.text in texts:
            self.index += 1
            return token
        return None

    def parse(self) -> Node:
        node = self.expr()
        if (token := self._peek()) is not None:
            raise self._error("expected an operator", token)
        return node

    def expr(self) -> Node:
        node = self.term()
        while (op := self._accept("+", "-")) is not None:
            right = self.term()
            node = BinOp(op.text, node, right, Span(node.span.line, node.span.column, right.span.end))
        return node

    def term(self) -> Node:
        node = self.factor()
        while (op := self._accept("*", "/")) is not None:
            right = self.factor()
            node = BinOp(op.text, node, right, Span(node.span.line, node.span.column, right.span.end))
        return node

    def factor(self) -> Node:
        node = self.atom()
        if self._accept("^") is None:
            return node
        sign = -1 if self._accept("-") is not None else 1
        token = self._peek()
        if token is None or token.kind != "int":
            raise self._error("exponent must be an integer literal", token)
        self.index += 1
        return Pow(node, sign * int(token.text), Span(node.span.line, node.span.column, token.span.end))

    def atom(self) -> Node:
        token = self._peek()
        if token is None:
            raise self._error("expected a number, a variable or '('")
        if (minus := self._accept("-")) is not None:
            operand = self.factor()
            return Neg(operand, Span(minus.span.line, minus.span.column, operand.span.end))
        if (opening := self._accept("(")) is not None:
            inner = self.expr()
            closing = self._accept(")")
            if closing is None:
                raise self._error("expected ')'", self._peek())
            return _respan(inner, Span(opening.span.line, opening.span.column, closing.span.end))
        self.index += 1
        if token.kind == "int":
            return Num(int(token.text), token.span)
        if token.kind == "name":
            return Var(token.text, token.span)
        raise self._error("expected a number, a variable or '('", token)


def _respan(node: Node, span: Span) -> Node:
    """括号内的表达式取括号的位置"""
    match node:
        case Num():
            return Num(node.value, span)
        case Var():
            return Var(node.name, span)
        case Neg():
            return Neg(node.operand, span)
        case BinOp():
            return BinOp(node.op, node.left, node.right, span)
        case Pow():
            return Pow(node.base, node.exponent, span)


def parse_ast(src: str) -> Node:
    return _Parser(src).parse()


class _Evaluator:
    """在 k(variables) 上, 或描述符为幂零扩张时在 k(variables)[eps] 上求值"""

    def __init__(self, fd: Domain, variables: tuple[str, ...]):
        self.fd = fd
        self.variables = variables
        self.nilpotent: NilpotentExtension | None = None
        self.base = fd
        if isinstance(fd, NilpotentExtension):
            self.base = fd.base
            self.nilpotent = NilpotentExtension(FunctionField(fd.base, variables), fd.names, fd.nilpotency)

    def _fail(self, message: str, node: Node) -> ExpressionSyntaxException:
        return ExpressionSyntaxException(message, node.span.line, node.span.column)

    def _const(self, value: int | FieldElem):
        f = RationalFunction.const(self.base, value, self.variables)
        if self.nilpotent is None:
            return f
        return FieldElem(self.nilpotent, self.nilpotent.embed(f))

    def _variable(self, node: Var):
        name = node.name
        if name in self.variables:
            f = RationalFunction.gen(self.base, name)
            return f if self.nilpotent is None else FieldElem(self.nilpotent, self.nilpotent.embed(f))
        if self.nilpotent is not None and name in self.nilpotent.names:
            R = self.nilpotent
            return FieldElem(R, R.generator(R.names.index(name)))
        if name == EXTENSION_GENERATOR and isinstance(self.base, ExtensionField):
            return self._const(FieldElem(self.base, self.base.generator))
        raise self._fail(f"variable {name!r} is not enabled for field {self.fd.spec}", node)

    def evaluate(self, node: Node):
        match node:
            case Num():
                return self._const(node.value)
            case Var():
                return self._variable(node)
            case Neg():
                return -self.evaluate(node.operand)
            case Pow():
                base = self.evaluate(node.base)
                try:
                    return base**node.exponent
                except (AlgebraException, ZeroFunctionException) as e:
                    raise self._fail("negative power of a non-invertible expression", node) from e
            case BinOp():
                left, right = self.evaluate(node.left), self.evaluate(node.right)
                if node.op == "+":
                    return left + right
                if node.op == "-":
                    return left - right
                if node.op == "*":
                    return left * right
                try:
                    return left / right
                except (AlgebraException, ZeroFunctionException) as e:
                    raise self._fail("zero denominator", node.right) from e
        raise TypeError(f"unknown node {node!r}")


def parse_expr(src: str, fd: Domain, variables: tuple[str, ...] = (LINE_VARIABLE,)):
    """解析 src; 描述符为幂零扩张时返回其上的 FieldElem, 否则返回约化的 RationalFunction"""
    return _Evaluator(fd, variables).evaluate(parse_ast(src))
