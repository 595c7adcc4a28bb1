"""Kleene three-valued logic."""

from __future__ import annotations

import enum
from typing import Iterable


class Tri(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    @classmethod
    def of(cls, b: bool) -> "Tri":
        return cls.YES if b else cls.NO

    @property
    def determined(self) -> bool:
        return self is not Tri.UNKNOWN

    def __invert__(self) -> "Tri":
        if self is Tri.UNKNOWN:
            return self
        return Tri.NO if self is Tri.YES else Tri.YES

    def __and__(self, other: "Tri") -> "Tri":
        return all_of((self, other))

    def __or__(self, other: "Tri") -> "Tri":
        return any_of((self, other))

    def __str__(self) -> str:
        return self.value


def all_of(values: Iterable[Tri]) -> Tri:
    """Kleene conjunction; short-circuits on NO."""
    result = Tri.YES
    for v in values:
        if v is Tri.NO:
            return Tri.NO
        if v is Tri.UNKNOWN:
            result = Tri.UNKNOWN
    return result


def any_of(values: Iterable[Tri]) -> Tri:
    """Kleene disjunction; short-circuits on YES."""
    result = Tri.NO
    for v in values:
        if v is Tri.YES:
            return Tri.YES
        if v is Tri.UNKNOWN:
            result = Tri.UNKNOWN
    return result
