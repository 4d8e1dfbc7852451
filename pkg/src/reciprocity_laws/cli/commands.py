from random import Random
from typing import TypeVar, ClassVar
from collections.abc import Callable
from dataclasses import dataclass

from tqdm import tqdm
from loguru import logger

from .data import SurveySummary, CommandConfig, CommandReport
from .expr import parse_expr
from .specs import (
    base_field,
    parse_flag,
    parse_curve,
    parse_place,
    parse_point,
    parse_chart,
    field_modulus,
    parse_line_function,
    parse_surface_function,
)
from ..config import Config
from ..places import divisor, valuation, residue_fdg
from ..symbols import (
    SymbolValue,
    tame_symbol,
    eps3_pairing,
    degree_symbol,
    pairing_residue,
    residue_pairing,
    nilpotent_symbol,
)
from ..algebra import Domain, NilpotentExtension
from ..surfaces import parshin_oracle, parshin_symbol
from ..verifiers import (
    BaseVerifier,
    ReciprocityReport,
    weil_check,
    degree_sum_check,
    residue_sum_check,
    parshin_curve_sum_check,
    parshin_point_sum_check,
)
from ..constants import LINE_VARIABLE, LawEnum
from ..exception import UsageException

_KEY_COMMAND = "_command"

T = TypeVar("T", bound="BaseCommands")
HandlerFunc = Callable[[T], CommandReport]


@dataclass(frozen=True, slots=True)
class CommandSpec:
    name: str
    help: str
    functions: int = 0
    """位置参数 (函数表达式) 的个数"""
    options: tuple[str, ...] = ()
    """命令专属选项, 见 cli.OPTIONS"""


def handle(name: str, help: str, functions: int = 0, options: tuple[str, ...] = ()):
    """注册子命令装饰器"""

    def decorator(func: HandlerFunc[T]) -> HandlerFunc[T]:
        setattr(func, _KEY_COMMAND, CommandSpec(name, help, functions, options))
        return func

    return decorator


class BaseCommands:
    """子命令集合的基类, 子类中被 handle 装饰的方法自动注册为子命令"""

    _handlers: ClassVar[dict[str, HandlerFunc]] = {}
    _specs: ClassVar[dict[str, CommandSpec]] = {}

    def __init__(self, domain: Domain, cfg: CommandConfig, config: Config):
        self.domain = domain
        self.cfg = cfg
        self.config = config

    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        cls._handlers = {}
        cls._specs = {}
        for attr_name in dir(cls):
            attr = getattr(cls, attr_name)
            if callable(attr) and hasattr(attr, _KEY_COMMAND):
                spec: CommandSpec = getattr(attr, _KEY_COMMAND)
                cls._handlers[spec.name] = attr
                cls._specs[spec.name] = spec

    @classmethod
    def get_specs(cls) -> list[CommandSpec]:
        return sorted(cls._specs.values(), key=lambda spec: spec.name)

    def run(self) -> CommandReport:
        handler = self._handlers.get(self.cfg.command)
        if handler is None:
            raise UsageException(f"unknown command {self.cfg.command!r}")
        spec = self._specs[self.cfg.command]
        if len(self.cfg.functions) != spec.functions:
            raise UsageException(f"{spec.name} takes {spec.functions} function(s), got {len(self.cfg.functions)}")
        logger.debug(f"running {spec.name} over {self.domain.spec}")
        return handler(self)

    def _report(self, **kwargs) -> CommandReport:
        return CommandReport(
            command=self.cfg.command,
            field=self.domain.spec,
            modulus=field_modulus(self.domain),
            **kwargs,
        )

    def _require(self, option: str) -> str:
        value = getattr(self.cfg, option)
        if value is None:
            raise UsageException(f"{self.cfg.command} needs --{option}")
        return value


class Commands(BaseCommands):
    def _line_functions(self) -> list:
        return [parse_line_function(src, self.domain) for src in self.cfg.functions]

    def _surface_functions(self) -> list:
        return [parse_surface_function(src, self.domain) for src in self.cfg.functions]

    def _place(self):
        return parse_place(self._require("place"), self.domain)

    def _symbol(self, functions: list, symbol: SymbolValue, **kwargs) -> CommandReport:
        details = dict(symbol.provenance.details) | kwargs.pop("details", {})
        return self._report(
            inputs=[str(f) for f in functions],
            value=str(symbol.value),
            details={"at": symbol.provenance.location, "formula": symbol.provenance.formula, **details},
            **kwargs,
        )

    def _check(self, report: ReciprocityReport) -> CommandReport:
        return self._report(
            inputs=report.inputs,
            values={c.piece: c.value for c in report.contributions},
            aggregate=report.aggregate,
            passed=report.passed,
            details=report.context,
            report=report,
        )

    # ---- 一维局部符号 ----

    @handle("divisor", "divisor of a rational function in t", functions=1)
    def principal_divisor(self) -> CommandReport:
        (f,) = self._line_functions()
        D = divisor(f, self.config)
        return self._report(
            inputs=[str(f)],
            value=str(D),
            values={str(p): str(m) for p, m in D.entries},
            details={"degree": str(D.degree)},
        )

    @handle("degree", "local degree [k(p):k] v_p(f)", functions=1, options=("place",))
    def local_degree(self) -> CommandReport:
        (f,) = self._line_functions()
        p = self._place()
        return self._report(
            inputs=[str(f)],
            value=str(degree_symbol(f, p)),
            details={"at": str(p), "v_p(f)": str(valuation(f, p))},
        )

    @handle("tame", "tame symbol (f, g)_p", functions=2, options=("place",))
    def tame(self) -> CommandReport:
        f, g = self._line_functions()
        return self._symbol([f, g], tame_symbol(f, g, self._place()))

    @handle("residue", "residue Res_p(f dg)", functions=2, options=("place",))
    def residue(self) -> CommandReport:
        f, g = self._line_functions()
        p = self._place()
        return self._report(inputs=[str(f), str(g)], value=str(residue_fdg(f, g, p)), details={"at": str(p)})

    @handle("eps-pairing", "(1 - eps1 f, 1 - eps2 g)_p", functions=2, options=("place",))
    def eps_pairing(self) -> CommandReport:
        f, g = self._line_functions()
        result = residue_pairing(f, g, self._place())
        return self._symbol([f, g], result, details={"residue": str(pairing_residue(result))})

    @handle("eps3-pairing", "(1 - eps f, 1 - eps g)_p with eps^3 = 0", functions=2, options=("place",))
    def truncated_pairing(self) -> CommandReport:
        f, g = self._line_functions()
        result = eps3_pairing(f, g, self._place())
        return self._symbol([f, g], result, details={"residue": str(pairing_residue(result))})

    @handle("nil-symbol", "r_p(F, G) for F, G in k(t) with nilpotents", functions=2, options=("place",))
    def nil_symbol(self) -> CommandReport:
        if not isinstance(self.domain, NilpotentExtension):
            raise UsageException("nil-symbol needs an eps2(..) or eps3(..) field")
        F, G = (parse_expr(src, self.domain, (LINE_VARIABLE,)) for src in self.cfg.functions)
        return self._symbol([F, G], nilpotent_symbol(F, G, self._place()))

    # ---- 二维 ----

    @handle("parshin", "Parshin symbol at a flag", functions=3, options=("flag", "oracle"))
    def parshin(self) -> CommandReport:
        functions = self._surface_functions()
        flag = parse_flag(self._require("flag"), self.domain)
        result = parshin_symbol(*functions, flag)
        if not self.cfg.oracle:
            return self._symbol(functions, result)
        oracle = parshin_oracle(*functions, flag)
        return self._symbol(
            functions,
            result,
            details={"oracle": str(oracle.value)},
            passed=oracle.value == result.value,
        )

    # ---- 互反律检查 ----

    @handle("check-degree", "sum of local degrees is 0", functions=1)
    def check_degree(self) -> CommandReport:
        (f,) = self._line_functions()
        return self._check(degree_sum_check(f, self.config))

    @handle("check-weil", "product of tame symbols is 1", functions=2)
    def check_weil(self) -> CommandReport:
        f, g = self._line_functions()
        return self._check(weil_check(f, g, self.config))

    @handle("check-residue", "sum of residues of f dg is 0", functions=2)
    def check_residue(self) -> CommandReport:
        f, g = self._line_functions()
        return self._check(residue_sum_check(f, g, self.config))

    @handle("check-parshin-points", "product over the points of a curve", functions=3, options=("curve", "chart"))
    def check_parshin_points(self) -> CommandReport:
        f1, f2, f3 = self._surface_functions()
        curve = parse_curve(self._require("curve"), self.domain)
        chart = parse_chart(self.cfg.chart)
        return self._check(parshin_point_sum_check(f1, f2, f3, curve, chart, self.config))

    @handle("check-parshin-curves", "product over the curves through a point", functions=3, options=("point", "chart"))
    def check_parshin_curves(self) -> CommandReport:
        f1, f2, f3 = self._surface_functions()
        point = parse_point(self._require("point"), self.domain)
        chart = parse_chart(self.cfg.chart)
        return self._check(parshin_curve_sum_check(f1, f2, f3, point, chart, self.config))

    @handle("survey", "random instances of one law", options=("law", "count"))
    def survey(self) -> CommandReport:
        try:
            law = LawEnum(self._require("law"))
        except ValueError:
            raise UsageException(f"unknown law {self.cfg.law!r}") from None
        if self.cfg.count < 1:
            raise UsageException("--count must be positive")

        domain = base_field(self.domain)
        verifier_class = BaseVerifier.of(law)
        rng = Random(self.config.seed)
        summary = SurveySummary(law=str(law), count=self.cfg.count, passed=0)
        for _ in tqdm(range(self.cfg.count), desc=f"{law} over {domain.spec}", unit="instance"):
            verifier, functions = verifier_class.sample(domain, rng, self.config)
            report = verifier.verify(*functions)
            if report.passed:
                summary.passed += 1
            else:
                summary.failed.append(report.inputs)

        logger.info(f"survey {law}: {summary.passed}/{summary.count} passed")
        return self._report(
            aggregate=f"{summary.passed}/{summary.count}",
            passed=not summary.failed,
            survey=summary,
        )
