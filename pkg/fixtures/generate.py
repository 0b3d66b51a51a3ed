"""Regenerate the derived fixtures in this directory.

    python fixtures/generate.py

The hand-written fixtures (original_tom.json etc.) are not touched.
tests/test_fixtures.py checks that the committed files match this output.
"""

import json
from itertools import combinations
from pathlib import Path

from kmunproj.complexes import be_complex, koszul_complex
from kmunproj.corpus import delpezzo_chain, original_jerry, original_tom, original_tom_chain_data
from kmunproj.io import dump_polys
from kmunproj.unproj import tom_d3, unproject_jerry, unproject_tom

HERE = Path(__file__).parent


def delpezzo_x6_pair():
    res, expected, flip = delpezzo_chain()[2]
    return {"vars": list(res.ctx.names), "tname": flip,
            "left": dump_polys(res.ideal.gens), "right": dump_polys(expected.gens)}


def syzygy_membership(d, run):
    res = run(d)
    g, z = res.g, d.z
    polys = [g[i] * z[j] - g[j] * z[i] for i, j in combinations(range(4), 2)]
    return {"vars": list(d.ctx.names), "ideal": dump_polys(d.pfaffians()), "polys": dump_polys(polys)}


def original_tom_chain():
    d = original_tom()
    g = unproject_tom(d).g
    L = be_complex(d.matrix())
    M = koszul_complex(list(d.z))
    D0, D1, D2 = original_tom_chain_data()
    return {"vars": list(d.ctx.names),
            "source": [m.to_json() for m in L.diffs],
            "target": [m.to_json() for m in M.diffs],
            "verticals": [m.to_json() for m in (D0, D1, D2, tom_d3(g))]}


def generated():
    return {
        "delpezzo_x6_pair.json": delpezzo_x6_pair(),
        "original_tom_syzygy.json": syzygy_membership(original_tom(), unproject_tom),
        "original_jerry_syzygy.json": syzygy_membership(original_jerry(), unproject_jerry),
        "original_tom_chain.json": original_tom_chain(),
    }


def render(data):
    return json.dumps(data, indent=1) + "\n"


if __name__ == "__main__":
    for name, data in generated().items():
        (HERE / name).write_text(render(data))
        print("wrote", name)
