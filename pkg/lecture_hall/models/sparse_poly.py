"""
희소 다변수 다항식 (정수 계수, x / y 두 변수족)

단항식은 (x 지수 튜플, y 지수 튜플)로 저장하며 끝의 0 지수는 잘라냅니다.
"""

from functools import reduce
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from models.errors import ParameterError

Exponents = Tuple[int, ...]
Monomial = Tuple[Exponents, Exponents]


def _trim(exps: Iterable[int]) -> Exponents:
    exps = list(exps)
    while exps and exps[-1] == 0:
        exps.pop()
    return tuple(exps)


def _add_exps(a: Exponents, b: Exponents) -> Exponents:
    if len(a) < len(b):
        a, b = b, a
    return _trim(tuple(e + (b[i] if i < len(b) else 0) for i, e in enumerate(a)))


class VarTruncation(BaseModel):
    """x_i (i ≥ p)와 y_j (j ≥ q)를 0으로 두는 절단. q가 None이면 y는 절단하지 않음"""
    model_config = ConfigDict(frozen=True)

    p: int = Field(ge=0)
    q: Optional[int] = Field(default=None, ge=0)


class SparsePoly:
    """정수 계수 희소 다항식 (불변 값)"""

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, int]] = None):
        self._terms: Dict[Monomial, int] = {}
        for (xexp, yexp), coeff in (terms or {}).items():
            self._add_term(coeff, (_trim(xexp), _trim(yexp)))

    def _add_term(self, coeff: int, key: Monomial) -> None:
        if coeff == 0:
            return
        total = self._terms.get(key, 0) + coeff
        if total:
            self._terms[key] = total
        else:
            del self._terms[key]

    # 생성자

    @classmethod
    def constant(cls, value: int) -> "SparsePoly":
        return cls({((), ()): value})

    @classmethod
    def monomial(cls, xexp: Sequence[int] = (), yexp: Sequence[int] = (), coeff: int = 1) -> "SparsePoly":
        return cls({(tuple(xexp), tuple(yexp)): coeff})

    @classmethod
    def x(cls, i: int) -> "SparsePoly":
        return cls.monomial(xexp=(0,) * i + (1,))

    @classmethod
    def y(cls, j: int) -> "SparsePoly":
        return cls.monomial(yexp=(0,) * j + (1,))

    @classmethod
    def x_sum(cls, p: int) -> "SparsePoly":
        """|x| = x_0 + ... + x_{p-1}"""
        return cls({((0,) * i + (1,), ()): 1 for i in range(p)})

    # 조회

    def terms(self) -> List[Tuple[Monomial, int]]:
        """지수 벡터 오름차순으로 정렬된 (단항식, 계수) 목록"""
        return sorted(self._terms.items())

    def coefficient(self, xexp: Sequence[int] = (), yexp: Sequence[int] = ()) -> int:
        return self._terms.get((_trim(xexp), _trim(yexp)), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, int]]:
        return iter(self.terms())

    def degree(self) -> int:
        return max((sum(x) + sum(y) for x, y in self._terms), default=0)

    # 산술

    @staticmethod
    def _coerce(other: Union["SparsePoly", int]) -> "SparsePoly":
        if isinstance(other, SparsePoly):
            return other
        if isinstance(other, int):
            return SparsePoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        result = SparsePoly(self._terms)
        for key, coeff in other._terms.items():
            result._add_term(coeff, key)
        return result

    __radd__ = __add__

    def __neg__(self) -> "SparsePoly":
        return SparsePoly({key: -coeff for key, coeff in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        result = SparsePoly()
        for (x1, y1), c1 in self._terms.items():
            for (x2, y2), c2 in other._terms.items():
                result._add_term(c1 * c2, (_add_exps(x1, x2), _add_exps(y1, y2)))
        return result

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SparsePoly":
        if k < 0:
            raise ParameterError(f"음의 거듭제곱은 지원하지 않습니다: {k}")
        result, base = SparsePoly.constant(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # 대입, 평가, 절단

    def substitute(
        self,
        x: Optional[Mapping[int, "SparsePoly"]] = None,
        y: Optional[Mapping[int, "SparsePoly"]] = None,
    ) -> "SparsePoly":
        """x_i -> x[i], y_j -> y[j] 대입 (매핑에 없는 변수는 그대로)"""
        x, y = x or {}, y or {}
        powers: Dict[Tuple[str, int, int], SparsePoly] = {}

        def _power(family: str, index: int, exp: int, image: SparsePoly) -> SparsePoly:
            key = (family, index, exp)
            if key not in powers:
                powers[key] = image ** exp
            return powers[key]

        result = SparsePoly()
        for (xexp, yexp), coeff in self._terms.items():
            kept_x = [0 if i in x else e for i, e in enumerate(xexp)]
            kept_y = [0 if j in y else e for j, e in enumerate(yexp)]
            term = SparsePoly({(tuple(kept_x), tuple(kept_y)): coeff})
            for i, e in enumerate(xexp):
                if e and i in x:
                    term = term * _power("x", i, e, x[i])
            for j, e in enumerate(yexp):
                if e and j in y:
                    term = term * _power("y", j, e, y[j])
            result = result + term
        return result

    def evaluate(self, x: Sequence[int] = (), y: Sequence[int] = ()) -> int:
        """정수 값 대입. 주어지지 않은 변수가 쓰이면 ParameterError"""
        total = 0
        for (xexp, yexp), coeff in self._terms.items():
            if len(xexp) > len(x) or len(yexp) > len(y):
                raise ParameterError("모든 변수에 값을 지정해야 합니다.")
            value = coeff
            for i, e in enumerate(xexp):
                value *= x[i] ** e
            for j, e in enumerate(yexp):
                value *= y[j] ** e
            total += value
        return total

    def truncate(self, trunc: VarTruncation) -> "SparsePoly":
        """절단 밖 변수를 포함하는 항을 제거"""
        return SparsePoly({
            (xexp, yexp): coeff
            for (xexp, yexp), coeff in self._terms.items()
            if len(xexp) <= trunc.p and (trunc.q is None or len(yexp) <= trunc.q)
        })

    # 직렬화

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for (xexp, yexp), coeff in self.terms():
            factors = [
                f"{name}{i}" if e == 1 else f"{name}{i}^{e}"
                for name, exps in (("x", xexp), ("y", yexp))
                for i, e in enumerate(exps) if e
            ]
            magnitude = abs(coeff)
            if factors and magnitude == 1:
                body = " * ".join(factors)
            else:
                body = " * ".join([str(magnitude)] + factors)
            pieces.append(("- " if coeff < 0 else "+ ") + body)
        text = " ".join(pieces)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def to_json(self) -> List[dict]:
        return [
            {"coeff": coeff, "xexp": list(xexp), "yexp": list(yexp)}
            for (xexp, yexp), coeff in self.terms()
        ]

    @classmethod
    def from_json(cls, records: Iterable[Mapping]) -> "SparsePoly":
        result = cls()
        for record in records:
            result._add_term(int(record["coeff"]), (_trim(record.get("xexp", ())), _trim(record.get("yexp", ()))))
        return result

    def __repr__(self) -> str:
        return f"SparsePoly({self.to_text()})"

    __str__ = to_text


def poly_sum(polys: Iterable[SparsePoly]) -> SparsePoly:
    return reduce(lambda a, b: a + b, polys, SparsePoly())


def poly_product(polys: Iterable[SparsePoly]) -> SparsePoly:
    return reduce(lambda a, b: a * b, polys, SparsePoly.constant(1))
