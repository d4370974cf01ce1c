from fractions import Fraction

import pytest

from apps.core.api.exceptions import TwinsFoundException, ValidationException
from apps.core.api.responses import ApiResponse
from apps.core.utils.parallel import parallel_map, resolve_jobs
from apps.core.utils.rationals import format_rational, parse_rational
from apps.core.utils.serializers import dumps, to_jsonable
from apps.core.utils.time_utils import duration_ms, now
from apps.core.utils.union_find import UnionFind, find_orbits


def _square(x):
    return x * x


class TestRationals:
    @pytest.mark.parametrize("text, expected", [("1/2", Fraction(1, 2)), ("3", Fraction(3)), (4, Fraction(4))])
    def test_parse(self, text, expected):
        assert parse_rational(text) == expected

    @pytest.mark.parametrize("bad", ["0.5", "", "1/0", "abc", True, 0.5])
    def test_rejects_inexact_or_malformed(self, bad):
        with pytest.raises(ValidationException):
            parse_rational(bad)

    def test_format(self):
        assert format_rational(Fraction(4, 2)) == "2"
        assert format_rational(Fraction(-1, 3)) == "-1/3"


def test_dumps_is_sorted_and_exact():
    assert dumps({"b": Fraction(1, 2), "a": (1, 2)}) == '{\n  "a": [\n    1,\n    2\n  ],\n  "b": "1/2"\n}'
    assert to_jsonable({frozenset({2, 1})}) == [[1, 2]]


def test_exception_exit_codes():
    exc = TwinsFoundException(data={"blocks": [[0, 1]]})
    assert (exc.status_code, exc.code, exc.exit_code) == (409, "twins_found", 3)
    assert exc.to_dict()["data"] == {"blocks": [[0, 1]]}
    assert ValidationException().exit_code == 2


def test_response_shell_from_exception():
    resp = ApiResponse.from_exception(TwinsFoundException(data={"blocks": [[0, 2], [1, 3]]}))
    assert resp.status_code == 409
    assert resp.to_dict() == {
        "success": False,
        "message": "目标图存在孪生节点",
        "code": "twins_found",
        "data": {"blocks": [[0, 2], [1, 3]]},
    }


def test_parallel_map_keeps_order():
    assert parallel_map(_square, range(10), jobs=1) == [x * x for x in range(10)]
    assert parallel_map(_square, range(10), jobs=2) == [x * x for x in range(10)]
    assert resolve_jobs(10_000) >= 1


def test_union_find_groups_in_first_appearance_order():
    uf = UnionFind("abcde")
    assert uf.union("c", "a")
    assert not uf.union("a", "c")
    uf.union("d", "e")
    assert uf.groups() == [["a", "c"], ["b"], ["d", "e"]]
    assert len(uf) == 3


def test_find_orbits_under_reflection():
    reflect = {0: 2, 1: 1, 2: 0}
    assert find_orbits([reflect], range(3), lambda g, x: g[x]) == [[0, 2], [1]]


def test_duration_ms_non_negative():
    assert duration_ms(now()) >= 0
    assert duration_ms(1.0, 1.5) == 500
