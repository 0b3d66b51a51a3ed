import importlib.util

import pytest

from kmunproj import io
from kmunproj.corpus import (explicit_example, original_jerry, original_tom, x3_to_x4, x4_to_x5, x5_to_x6)

from conftest import FIXTURES


def _generator():
    spec = importlib.util.spec_from_file_location("fixture_generator", FIXTURES / "generate.py")
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


GEN = _generator()
DERIVED = GEN.generated()


@pytest.mark.parametrize("name", sorted(DERIVED))
def test_derived_fixture_is_current(name):
    assert (FIXTURES / name).read_text() == GEN.render(DERIVED[name]), \
        f"{name} is stale; rerun python3 fixtures/generate.py"


@pytest.mark.parametrize("name, kind, build", [
    ("original_tom.json", "tom", original_tom),
    ("original_tom_matrix.json", "tom", original_tom),
    ("original_jerry.json", "jerry", original_jerry),
    ("explicit_tom_example.json", "tom", explicit_example),
    ("delpezzo_x3_x4.json", "ci", x3_to_x4),
    ("delpezzo_x4_x5.json", "ci", x4_to_x5),
])
def test_hand_written_fixture_matches_corpus(name, kind, build):
    data = io.load(str(FIXTURES / name))
    d = io.unprojection_data(io.context(data), data, kind)
    want = build()
    assert d.ctx.names == want.ctx.names
    if kind == "ci":
        assert (d.Q, d.v, d.w) == (want.Q, want.v, want.w)
    else:
        assert d.matrix() == want.matrix()


def test_delpezzo_x5_x6_fixture():
    data = io.load(str(FIXTURES / "delpezzo_x5_x6.json"))
    d = io.tom_data(io.context(data), data)
    want = x5_to_x6()
    assert d.matrix() == want.matrix() and d.z == want.z
