"""정확한 유리수 파싱/직렬화"""
import re
from fractions import Fraction
from typing import Dict, Iterable, Union

from src.core.exceptions import UsageError

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")

QSpec = Union[Fraction, Dict[str, Fraction]]


def parse_rational(text: str) -> Fraction:
    """'a/b' 또는 정수 문자열을 Fraction으로 변환"""
    match = _RATIONAL.match(text)
    if not match:
        raise UsageError(f"유리수 형식이 아닙니다: {text!r}", details={"value": text})
    numerator, denominator = match.group(1), match.group(2)
    if denominator is not None and int(denominator) == 0:
        raise UsageError(f"분모가 0입니다: {text!r}", details={"value": text})
    return Fraction(int(numerator), int(denominator or 1))


def parse_q_spec(text: str) -> QSpec:
    """'1/3' (균일) 또는 'a=1/3,b=1/2' (꼭짓점별) 형식의 q 지정 파싱"""
    if "=" not in text:
        return parse_rational(text)
    values: Dict[str, Fraction] = {}
    for item in text.split(","):
        label, sep, value = item.partition("=")
        label = label.strip()
        if not sep or not label:
            raise UsageError(f"꼭짓점별 q 형식이 아닙니다: {item!r}", details={"value": text})
        if label in values:
            raise UsageError(f"q 가 두 번 지정된 꼭짓점: {label}", details={"vertex": label})
        values[label] = parse_rational(value)
    return values


def format_rational(value: Fraction) -> str:
    """Fraction을 항상 'num/den' 문자열로 직렬화"""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def format_rationals(values: Iterable[Fraction]) -> list[str]:
    """유리수 목록 직렬화"""
    return [format_rational(v) for v in values]
