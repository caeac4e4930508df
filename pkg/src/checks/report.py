"""
Verification records and the decorator every checker runs under.
"""
from __future__ import annotations

import functools
import inspect
import time
from enum import Enum
from typing import Any, Callable

from pydantic import BaseModel

from src.utils.errors import OrderTooLarge

JSONL_FIELDS = ("check_id", "params", "computed", "expected", "verdict", "elapsed_ms")


class Verdict(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"
    NOT_APPLICABLE = "not-applicable"


class CheckReport(BaseModel):
    check_id: str
    params: dict[str, Any]
    computed: str = ""
    expected: str = ""
    verdict: Verdict
    elapsed_ms: float = 0.0
    detail: str = ""

    @property
    def failed(self) -> bool:
        return self.verdict is Verdict.FAIL


def verdict_of(ok: bool) -> Verdict:
    return Verdict.PASS if ok else Verdict.FAIL


def judged(check_id: str, params: dict, computed: Any, expected: Any, ok: bool, detail: str = "") -> CheckReport:
    return CheckReport(
        check_id=check_id,
        params=params,
        computed=str(computed),
        expected=str(expected),
        verdict=verdict_of(ok),
        detail=detail,
    )


def not_applicable(check_id: str, params: dict, reason: str, computed: Any = "") -> CheckReport:
    return CheckReport(
        check_id=check_id,
        params=params,
        computed=str(computed),
        verdict=Verdict.NOT_APPLICABLE,
        detail=reason,
    )


def inconclusive(check_id: str, params: dict, reason: str, computed: Any = "") -> CheckReport:
    return CheckReport(
        check_id=check_id,
        params=params,
        computed=str(computed),
        verdict=Verdict.INCONCLUSIVE,
        detail=reason,
    )


def checker(check_id: str) -> Callable:
    """Time a checker and turn engine cap violations into inconclusive records."""

    def wrap(func: Callable[..., CheckReport]) -> Callable[..., CheckReport]:
        signature = inspect.signature(func)

        @functools.wraps(func)
        def run(*args, **kwargs) -> CheckReport:
            started = time.perf_counter()
            try:
                report = func(*args, **kwargs)
            except OrderTooLarge as exc:
                bound = signature.bind(*args, **kwargs)
                params = {k: v for k, v in bound.arguments.items() if k != "settings"}
                report = inconclusive(check_id, params, str(exc))
            elapsed = round((time.perf_counter() - started) * 1000, 3)
            return report.model_copy(update={"elapsed_ms": elapsed})

        run.check_id = check_id
        return run

    return wrap
