"""Verifier 基类定义"""

from abc import ABC, abstractmethod
from random import Random
from typing import Any, Generic, TypeVar, ClassVar
from functools import reduce
from concurrent.futures import ThreadPoolExecutor

from loguru import logger

from .data import SpotCheck, LocalContribution, ReciprocityReport, EnumerationCertificate
from ..config import Config, pconfig
from ..symbols import SymbolValue
from ..algebra import Domain, FieldElem
from ..constants import LawEnum
from ..exception import UsageException

Piece = TypeVar("Piece")


class BaseVerifier(ABC, Generic[Piece]):
    """所有互反律检查的抽象基类

    子类必须实现:
    - law: 对应的互反律
    - arity: 输入函数的个数
    - support: 局部符号可能非平凡的有限个局部块, 按规范顺序
    - local: 一个局部块上的局部符号
    - random_piece: 支撑集之外的随机局部块
    """

    _registry: ClassVar[dict[LawEnum, type["BaseVerifier"]]] = {}
    """ 存储所有已注册的 Verifier 类 """

    law: ClassVar[LawEnum]
    arity: ClassVar[int]
    additive: ClassVar[bool] = False
    """加法符号 (次数, 留数) 的和为 0, 乘法符号的积为 1"""
    argument: ClassVar[str]
    """支撑集之外局部符号平凡的理由"""

    def __init__(self, domain: Domain, config: Config | None = None):
        self.domain = domain
        self.config = config or pconfig

    def __init_subclass__(cls, **kwargs):
        """自动注册子类到 _registry"""
        super().__init_subclass__(**kwargs)
        if ABC not in cls.__bases__:
            BaseVerifier._registry[cls.law] = cls

    @classmethod
    def get_all_subclass(cls) -> dict[LawEnum, type["BaseVerifier"]]:
        """获取所有已注册的 Verifier 类"""
        return cls._registry

    @classmethod
    def of(cls, law: LawEnum) -> type["BaseVerifier"]:
        return cls._registry[law]

    @abstractmethod
    def support(self, functions: tuple) -> list[Piece]: ...

    @abstractmethod
    def local(self, functions: tuple, piece: Piece) -> SymbolValue: ...

    @abstractmethod
    def random_piece(self, rng: Random, functions: tuple, excluded: set[Piece]) -> Piece | None: ...

    @classmethod
    @abstractmethod
    def sample(cls, domain: Domain, rng: Random, config: Config | None = None) -> tuple["BaseVerifier", tuple]:
        """随机实例: (检查器, 输入函数)"""

    def context(self) -> dict[str, str]:
        return {}

    @property
    def identity(self) -> Any:
        if self.additive:
            return FieldElem(self.domain, self.domain.zero)
        return FieldElem(self.domain, self.domain.one)

    def combine(self, left: Any, right: Any) -> Any:
        return left + right if self.additive else left * right

    def is_identity(self, value: Any) -> bool:
        if isinstance(value, int):
            return value == 0
        return value == self.identity

    def evaluate(self, functions: tuple, pieces: list[Piece]) -> list[SymbolValue]:
        """逐块计算局部符号, 结果顺序与 pieces 一致"""
        if self.config.max_workers == 1 or len(pieces) < 2:
            return [self.local(functions, p) for p in pieces]
        with ThreadPoolExecutor(max_workers=self.config.max_workers) as pool:
            return list(pool.map(lambda p: self.local(functions, p), pieces))

    def spot_check(self, functions: tuple, excluded: set[Piece]) -> list[SpotCheck]:
        rng = Random(self.config.seed)
        checks: list[SpotCheck] = []
        for _ in range(self.config.spot_checks):
            piece = self.random_piece(rng, functions, excluded)
            if piece is None:
                logger.debug(f"no off-support piece left for {self.law}, stopping spot checks")
                break
            value = self.local(functions, piece).value
            checks.append(SpotCheck(piece=str(piece), value=str(value), trivial=self.is_identity(value)))
        return checks

    def verify(self, *functions) -> ReciprocityReport:
        if len(functions) != self.arity:
            raise UsageException(f"{self.law} takes {self.arity} function(s), got {len(functions)}")
        pieces = self.support(functions)
        values = self.evaluate(functions, pieces)
        aggregate = reduce(self.combine, (v.value for v in values), self.identity)
        passed = self.is_identity(aggregate)

        certificate = EnumerationCertificate(
            support=[str(p) for p in pieces],
            argument=self.argument,
            spot_checks=self.spot_check(functions, set(pieces)),
        )
        if not certificate.certified:
            logger.warning(f"{self.law}: a spot check outside the support is not trivial")
        if passed:
            logger.success(f"{self.law} holds over {self.domain.spec}: {len(pieces)} local piece(s)")
        else:
            logger.warning(f"{self.law} fails over {self.domain.spec}: aggregate {aggregate}")

        return ReciprocityReport(
            law=str(self.law),
            field=self.domain.spec,
            inputs=[str(f) for f in functions],
            contributions=[
                LocalContribution(piece=str(p), value=str(v.value), details=dict(v.provenance.details))
                for p, v in zip(pieces, values)
            ],
            aggregate=str(aggregate),
            passed=passed,
            certificate=certificate,
            context=self.context(),
        )
