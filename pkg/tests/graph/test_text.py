# -*- coding: utf-8 -*-

# © 2026, The gvpoles Developers
# Author: The gvpoles Developers
"""
Tests for the text format of forests.
"""

import pytest

from gvpoles.partitions import RSet
from gvpoles.graph import (
    amplitude_H, enumerate_combined_forests, forest_from_text, forest_to_text,
    generate_vev_forests
)

FOREST_TEXT = """forest
word 1,-1 | 0,2
vertex 0 0 2 black
vertex 1 1 0 black leaf 1
vertex 2 -1 2 black leaf 2
edge 0 1 left
edge 0 2 right
root 0
end
"""


def test_vev_forest_text():
    (forest, ) = generate_vev_forests((1, -1), (0, 2))
    assert forest_to_text(forest) == FOREST_TEXT
    assert forest_from_text(FOREST_TEXT) == forest


def test_white_forest():
    for forest in generate_vev_forests((1, 1, -1, -1), (0, 0, 0, 0)):
        text = forest_to_text(forest)
        assert 'white' in text
        assert forest_from_text(text) == forest


def test_combined_forest():
    rset = RSet(
        mu=((1, ), (), ()), nu=((), (1, ), ()), lam=((1, ), (1, 1), (1, ))
    )
    for combined in enumerate_combined_forests(rset, (1, 1, 1)):
        text = forest_to_text(combined)
        assert text.startswith('combined\n')
        parsed = forest_from_text(text)
        assert parsed.rset == combined.rset
        assert parsed.gamma == combined.gamma
        assert parsed.forests == combined.forests
        assert parsed.bridges == combined.bridges
        assert amplitude_H(parsed) == amplitude_H(combined)


def test_unknown_header():
    with pytest.raises(ValueError):
        forest_from_text('tree\nend\n')


def test_unknown_object():
    with pytest.raises(TypeError):
        forest_to_text((1, 2))
