# -*- coding: utf-8 -*-
"""
절단된 형식적 멱급수 (truncated formal power series) 산술
계수는 정확한 정수/유리수이며, 각 Series 는 자신의 절단 차수 prec 을 가진다
(Series 는 q^prec 을 법으로 알려진 값)
"""
from __future__ import annotations

import logging
import numbers
from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Iterable, Mapping, Optional, Union

import gmpy2
import numpy as np

from .errors import (
    ConstructionError,
    NonIntegralError,
    NotAUnitError,
    NotDivisibleError,
    PrecisionError,
)

logger = logging.getLogger(__name__)

Exact = Union[int, Fraction]

# repr 에서 보여줄 최대 항 수
REPR_TERMS = 8


def exact(value) -> Exact:
    """계수를 int 또는 Fraction 으로 정규화 (float 은 거부)"""
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, numbers.Integral):
        return int(value)
    if isinstance(value, numbers.Rational):
        return exact(Fraction(int(value.numerator), int(value.denominator)))
    if isinstance(value, str):
        return exact(Fraction(value))
    raise ConstructionError(f"Inexact coefficient not allowed: {value!r}")


def _is_int(value: Exact) -> bool:
    return isinstance(value, int) or value.denominator == 1


def _object_array(values, size: int) -> np.ndarray:
    arr = np.empty(size, dtype=object)
    if size:
        arr[:] = values
    return arr


class Series:
    """
    절단된 멱급수 f = sum_{n < prec} coeffs[n] q^n + O(q^prec)

    생성 후에는 불변(immutable) 이다. 계수 배열은 읽기 전용 numpy object 배열로
    Python int / Fraction 만 담는다.
    """

    __slots__ = ("_coeffs", "_prec", "_integral")

    def __init__(self, coeffs: Iterable, prec: int):
        if isinstance(prec, bool) or not isinstance(prec, numbers.Integral) or prec < 0:
            raise ConstructionError(f"prec must be a nonnegative integer, got {prec!r}")
        values = [exact(c) for c in coeffs]
        if len(values) != prec:
            raise ConstructionError(
                f"Coefficient count {len(values)} does not match prec {prec}"
            )
        arr = _object_array(values, int(prec))
        self._set(arr, all(isinstance(v, int) for v in values))

    @classmethod
    def _wrap(cls, arr: np.ndarray, integral: Optional[bool] = None) -> "Series":
        """검증 없이 내부 배열을 감싼다 (모듈 내부 전용)"""
        obj = cls.__new__(cls)
        if integral is None:
            integral = all(isinstance(v, int) for v in arr.tolist())
        obj._set(arr, integral)
        return obj

    def _set(self, arr: np.ndarray, integral: bool) -> None:
        arr.flags.writeable = False
        self._coeffs = arr
        self._prec = len(arr)
        self._integral = integral

    @property
    def coeffs(self) -> np.ndarray:
        """읽기 전용 계수 배열"""
        return self._coeffs

    @property
    def prec(self) -> int:
        return self._prec

    @property
    def is_integral(self) -> bool:
        """모든 계수가 정수인지 여부 (분모 1 인 Fraction 은 int 로 정리)"""
        if self._integral:
            return True
        values = self._coeffs.tolist()
        if not all(_is_int(v) for v in values):
            return False
        self._set(_object_array([int(v) for v in values], self._prec), True)
        return True

    def tolist(self) -> list:
        return self._coeffs.tolist()

    def __getitem__(self, n: int) -> Exact:
        return coeff(self, n)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self._prec == other._prec and self.tolist() == other.tolist()

    __hash__ = None

    def __add__(self, other):
        return add(self, _coerce(other, self._prec))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, _coerce(other, self._prec))

    def __rsub__(self, other):
        return sub(_coerce(other, self._prec), self)

    def __neg__(self):
        return neg(self)

    def __mul__(self, other):
        if isinstance(other, Series):
            return mul(self, other)
        return scale(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return power(self, k)

    def __repr__(self) -> str:
        terms = []
        for n, c in enumerate(self._coeffs.tolist()[:REPR_TERMS]):
            if c == 0:
                continue
            if n == 0:
                terms.append(f"{c}")
            elif n == 1:
                terms.append(f"{c}*q")
            else:
                terms.append(f"{c}*q^{n}")
        if self._prec > REPR_TERMS:
            terms.append("...")
        terms.append(f"O(q^{self._prec})")
        return f"Series({' + '.join(terms)})"


def _coerce(value, prec: int) -> Series:
    if isinstance(value, Series):
        return value
    return constant(value, prec)


# ---------------------------------------------------------------------------
# 생성자
# ---------------------------------------------------------------------------

def make(coeffs: Iterable, prec: int) -> Series:
    """계수열과 절단 차수로 Series 생성 (길이 != prec 이면 ConstructionError)"""
    return Series(coeffs, prec)


def zero(prec: int) -> Series:
    return Series._wrap(_object_array(0, prec), True)


def constant(value, prec: int) -> Series:
    arr = _object_array(0, prec)
    value = exact(value)
    if prec:
        arr[0] = value
    return Series._wrap(arr, isinstance(value, int))


def one(prec: int) -> Series:
    return constant(1, prec)


def from_terms(terms: Mapping[int, object], prec: int) -> Series:
    """{지수: 계수} 사전에서 생성, prec 이상의 지수는 버린다"""
    arr = _object_array(0, prec)
    for n, c in terms.items():
        if n < 0:
            raise ConstructionError(f"Negative exponent {n} in from_terms")
        if n < prec:
            arr[n] = arr[n] + exact(c)
    return Series._wrap(arr)


def truncate(f: Series, n: int) -> Series:
    """q^n 까지 잘라낸 급수 (n 은 f.prec 이하)"""
    if n < 0 or n > f.prec:
        raise PrecisionError(f"Cannot truncate a prec-{f.prec} series to prec {n}")
    if n == f.prec:
        return f
    return Series._wrap(f.coeffs[:n].copy(), f._integral)


def _padded(f: Series, n: int) -> Series:
    """0 을 채워 prec 을 늘린다. 알려지지 않은 계수를 만드는 내부 연산 (Newton 반복 전용)"""
    arr = _object_array(0, n)
    arr[:f.prec] = f.coeffs
    return Series._wrap(arr, f._integral)


# ---------------------------------------------------------------------------
# 덧셈 / 스칼라 곱
# ---------------------------------------------------------------------------

def add(f: Series, g: Series) -> Series:
    n = min(f.prec, g.prec)
    return Series._wrap(f.coeffs[:n] + g.coeffs[:n], f._integral and g._integral)


def sub(f: Series, g: Series) -> Series:
    n = min(f.prec, g.prec)
    return Series._wrap(f.coeffs[:n] - g.coeffs[:n], f._integral and g._integral)


def neg(f: Series) -> Series:
    return Series._wrap(-f.coeffs, f._integral)


def scale(f: Series, c) -> Series:
    c = exact(c)
    return Series._wrap(f.coeffs * c, f._integral and isinstance(c, int))


# ---------------------------------------------------------------------------
# 곱셈: Kronecker substitution + gmpy2 큰 정수 곱
# ---------------------------------------------------------------------------

def _pack(values: list, width: int) -> int:
    """부호 있는 계수열을 width 바이트 슬롯의 큰 정수 하나로 묶는다"""
    pos = b"".join((v if v > 0 else 0).to_bytes(width, "little") for v in values)
    neg_ = b"".join((-v if v < 0 else 0).to_bytes(width, "little") for v in values)
    return int.from_bytes(pos, "little") - int.from_bytes(neg_, "little")


def _unpack(value: int, width: int, n: int) -> list:
    """_pack 의 역: 하위 n 개 슬롯을 부호 있는 정수로 복원"""
    half = 1 << (8 * width - 1)
    bias = int.from_bytes((b"\x00" * (width - 1) + b"\x80") * n, "little")
    mask = (1 << (8 * width * n)) - 1
    raw = ((value + bias) & mask).to_bytes(width * n, "little")
    return [
        int.from_bytes(raw[i:i + width], "little") - half
        for i in range(0, width * n, width)
    ]


def _integer_product(a: list, b: list, n: int) -> list:
    """
    정수 계수열 a, b 의 Cauchy 곱을 q^n 까지 계산

    두 다항식을 2^(8*width) 진법의 큰 정수로 바꿔 한 번 곱한 뒤 다시 풀어낸다.
    슬롯 폭은 곱의 계수가 넘치지 않도록 잡는다.
    """
    a = a[:n]
    b = b[:n]
    bound_a = max(abs(x) for x in a)
    bound_b = max(abs(x) for x in b)
    if bound_a == 0 or bound_b == 0:
        return [0] * n
    bits = (bound_a.bit_length() + bound_b.bit_length()
            + min(len(a), len(b)).bit_length() + 1)
    width = (bits + 7) // 8
    product = gmpy2.mpz(_pack(a, width)) * gmpy2.mpz(_pack(b, width))
    return _unpack(int(product), width, n)


def _common_denominator(values: list) -> int:
    return reduce(lcm, (v.denominator for v in values if isinstance(v, Fraction)), 1)


def mul(f: Series, g: Series) -> Series:
    """Cauchy 곱, prec = min(f.prec, g.prec)"""
    n = min(f.prec, g.prec)
    if n == 0:
        return zero(0)
    integral = f.is_integral and g.is_integral
    a = f.coeffs[:n].tolist()
    b = g.coeffs[:n].tolist()
    if integral:
        return Series._wrap(_object_array(_integer_product(a, b, n), n), True)

    # 유리수: 공통 분모로 정수화한 뒤 곱하고 다시 나눈다
    den_a = _common_denominator(a)
    den_b = _common_denominator(b)
    ints_a = [int(x * den_a) for x in a]
    ints_b = [int(x * den_b) for x in b]
    den = den_a * den_b
    values = [exact(Fraction(x, den)) for x in _integer_product(ints_a, ints_b, n)]
    return Series._wrap(_object_array(values, n))


def power(f: Series, k: int) -> Series:
    """f^k (k < 0 이면 역원의 거듭제곱)"""
    if k < 0:
        return power(invert(f), -k)
    result = one(f.prec)
    base = f
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


def invert(f: Series) -> Series:
    """
    곱셈 역원 (Newton 반복: g <- g(2 - f g), 정밀도가 매 단계 두 배)

    상수항이 ±1 이면 결과도 정수 계수이고, 그 외에는 유리수 계수가 된다.
    """
    if f.prec == 0:
        return zero(0)
    if f.coeffs[0] == 0:
        raise NotAUnitError("Series is not a unit: constant term is zero")
    c0 = f.coeffs[0]
    g = constant(Fraction(1) / c0, 1)
    n = 1
    while n < f.prec:
        n = min(2 * n, f.prec)
        fn = truncate(f, n)
        gn = _padded(g, n)
        residual = sub(one(n), mul(fn, gn))
        g = add(gn, mul(gn, residual))
    return g


def divide(f: Series, g: Series) -> Series:
    return mul(f, invert(g))


# ---------------------------------------------------------------------------
# 이항 인수 (1 - c q^e) 곱/나눗셈: 무한곱과 항별 합의 빠른 경로
# ---------------------------------------------------------------------------

def mul_binomial(f: Series, c, e: int) -> Series:
    """f * (1 - c q^e), e >= 0"""
    if e < 0:
        raise ConstructionError(f"Binomial exponent must be nonnegative, got {e}")
    c = exact(c)
    integral = f._integral and isinstance(c, int)
    if c == 0:
        return f
    if e == 0:
        return Series._wrap(f.coeffs * (1 - c), integral)
    out = f.coeffs.copy()
    n = f.prec
    if e < n:
        if c == 1:
            out[e:] = out[e:] - f.coeffs[:n - e]
        elif c == -1:
            out[e:] = out[e:] + f.coeffs[:n - e]
        else:
            out[e:] = out[e:] - c * f.coeffs[:n - e]
    return Series._wrap(out, integral)


def div_binomial(f: Series, c, e: int) -> Series:
    """f / (1 - c q^e), e >= 1"""
    if e < 1:
        raise ConstructionError(f"Binomial divisor exponent must be positive, got {e}")
    c = exact(c)
    integral = f._integral and isinstance(c, int)
    n = f.prec
    if c == 0 or e >= n:
        return f
    rows = -(-n // e)
    block = _object_array(0, rows * e)
    block[:n] = f.coeffs
    block = block.reshape(rows, e)
    # 열(column) 별로 g_k = f_k + c g_{k-1} 점화식
    if c == 1:
        block = np.cumsum(block, axis=0)
    elif c == -1:
        signs = _object_array([1 if r % 2 == 0 else -1 for r in range(rows)], rows)
        signs = signs.reshape(rows, 1)
        block = np.cumsum(block * signs, axis=0) * signs
    else:
        for r in range(1, rows):
            block[r] = block[r] + c * block[r - 1]
    return Series._wrap(block.reshape(-1)[:n].copy(), integral)


# ---------------------------------------------------------------------------
# 변수 치환 / shift / 계수 접근 / 법 연산
# ---------------------------------------------------------------------------

def substitute_power(f: Series, k: int, sign: int = 1) -> Series:
    """f(sign * q^k), 결과 prec = f.prec * k"""
    if k < 1:
        raise ConstructionError(f"Substitution power must be positive, got {k}")
    if sign not in (1, -1):
        raise ConstructionError(f"Substitution sign must be +1 or -1, got {sign}")
    values = f.coeffs.copy()
    if sign == -1:
        values[1::2] = -values[1::2]
    if k == 1:
        return Series._wrap(values, f._integral)
    out = _object_array(0, f.prec * k)
    out[::k] = values
    return Series._wrap(out, f._integral)


def shift(f: Series, k: int) -> Series:
    """q^k 곱. k < 0 이면 앞의 |k| 계수가 0 인지 확인하고 떼어낸다"""
    if k >= 0:
        out = _object_array(0, f.prec + k)
        out[k:] = f.coeffs
        return Series._wrap(out, f._integral)
    m = -k
    if m > f.prec:
        raise PrecisionError(
            f"Cannot divide by q^{m}: only {f.prec} coefficients are known"
        )
    head = f.coeffs[:m].tolist()
    for n, c in enumerate(head):
        if c != 0:
            raise NotDivisibleError(
                f"Series is not divisible by q^{m}: coefficient of q^{n} is {c}"
            )
    return Series._wrap(f.coeffs[m:].copy(), f._integral)


def coeff(f: Series, n: int) -> Exact:
    """q^n 의 계수. n >= prec 이면 0 이 아니라 PrecisionError"""
    if n < 0 or n >= f.prec:
        raise PrecisionError(
            f"Coefficient of q^{n} is beyond truncation order {f.prec}"
        )
    return f.coeffs[n]


def reduce_mod(f: Series, m: int) -> Series:
    """계수를 [0, m) 의 대표원으로 환원"""
    if m < 2:
        raise ConstructionError(f"Modulus must be at least 2, got {m}")
    if not f.is_integral:
        raise NonIntegralError("reduce_mod requires integer coefficients")
    return Series._wrap(f.coeffs % m, True)


def valuation(f: Series) -> Optional[int]:
    """0 이 아닌 첫 계수의 지수 (모두 0 이면 None)"""
    for n, c in enumerate(f.tolist()):
        if c != 0:
            return n
    return None


def leading(f: Series, count: int) -> list:
    """앞쪽 count 개 계수 (표시용)"""
    return f.coeffs[:count].tolist()


class SeriesBuffer:
    """
    항별 합(termwise sum)을 모으는 가변 버퍼

    각 항은 q^start 를 곱한 위치에 더해지며, 항의 prec 이 버퍼 prec 을 채우지
    못하면 PrecisionError. freeze() 로 불변 Series 를 얻는다.
    """

    def __init__(self, prec: int):
        self.prec = prec
        self._buf = _object_array(0, prec)

    def add_shifted(self, g: Series, start: int, scalar=1) -> None:
        """버퍼 += scalar * q^start * g"""
        if start >= self.prec:
            return
        if start + g.prec < self.prec:
            raise PrecisionError(
                f"Term known to q^{start + g.prec} cannot fill a prec-{self.prec} sum"
            )
        n = self.prec - start
        chunk = g.coeffs[:n]
        self._buf[start:] = self._buf[start:] + (chunk if scalar == 1 else chunk * exact(scalar))

    def add_geometric(self, start: int, step: int, scalar=1, ratio: int = 1) -> None:
        """버퍼 += scalar * q^start / (1 - ratio * q^step), ratio 는 ±1"""
        if start >= self.prec:
            return
        if ratio == 1:
            self._buf[start::step] = self._buf[start::step] + exact(scalar)
        else:
            count = len(range(start, self.prec, step))
            signs = _object_array([1 if j % 2 == 0 else -1 for j in range(count)], count)
            self._buf[start::step] = self._buf[start::step] + signs * exact(scalar)

    def freeze(self) -> Series:
        return Series._wrap(self._buf.copy())
