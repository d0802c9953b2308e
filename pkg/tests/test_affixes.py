import io

import pytest
from hypothesis import given
from hypothesis import strategies as st

from atr.affixes import (
    AffixTable,
    WordSegments,
    default_table,
    load_affix_file,
    load_affix_table,
    split_word,
)
from atr.errors import AffixParseError


def test_load_basic():
    table = load_affix_table(io.StringIO("[prefixes]\nap\nret\n[suffixes]\nal\nate\nized\n"))
    assert table.prefixes == {"ap", "ret"}
    assert table.suffixes == {"al", "ate", "ized"}


def test_load_dedup_lowercase_and_comments():
    table = load_affix_table("# header\n[suffixes]\nal\nAL\n\n  al  \n# c\n[prefixes]\nRe\n")
    assert table.suffixes == {"al"}
    assert table.prefixes == {"re"}


def test_load_no_affixes():
    with pytest.raises(AffixParseError, match="no affixes"):
        load_affix_table("[prefixes]\n")


@pytest.mark.parametrize(
    "text, line",
    [
        ("[prefixes]\nap\n[infixes]\nx\n", 3),
        ("[prefixes\nap\n", 1),
        ("ap\n[prefixes]\n", 1),
        ("[suffixes]\n" + "x" * 16 + "\n", 2),
        ("[suffixes]\na b\n", 2),
    ],
)
def test_load_errors_carry_line_numbers(text, line):
    with pytest.raises(AffixParseError) as info:
        load_affix_table(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_load_file(tmp_path):
    path = tmp_path / "aff.txt"
    path.write_text("[prefixes]\nre\n", encoding="utf-8")
    assert load_affix_file(path).prefixes == {"re"}


def test_default_table_size_and_invariants():
    table = default_table()
    assert 150 <= len(table) <= 300
    for entry in table.prefixes | table.suffixes:
        assert 1 <= len(entry) <= 15
        assert entry == entry.lower()


def test_table_rejects_empty_entry():
    with pytest.raises(ValueError):
        AffixTable.from_lists([""], [])


@pytest.mark.parametrize(
    "word, prefixes, suffixes, expected",
    [
        ("quantized", ["re"], ["ized", "d", "ed"], ("quant", "quantized")),
        ("Aproximate", ["ap"], ["ate"], ("Aproxim", "roximate")),
        ("retrieval", ["ret"], ["al"], ("retriev", "rieval")),
        ("textual", ["ap", "ret"], ["ate", "al"], ("textu", "textual")),
        ("xyzzy", ["ap"], ["al"], ("xyzzy", "xyzzy")),
    ],
)
def test_split_examples(word, prefixes, suffixes, expected):
    parts = split_word(word, AffixTable.from_lists(prefixes, suffixes))
    assert (parts.prefix_root, parts.root_suffix) == expected


def test_split_longest_affix_that_leaves_enough():
    # "ization" would leave "real" (4 < ceil(11/2)), so "ation" is used.
    table = AffixTable.from_lists([], ["ation", "ization", "n"])
    assert split_word("realization", table).prefix_root == "realiz"


def test_split_refuses_degenerate_remainder():
    table = AffixTable.from_lists(["ca"], ["at"])
    assert split_word("cat", table) == WordSegments("cat", "cat", "cat")


def test_split_case_insensitive_preserving():
    table = AffixTable.from_lists(["un"], ["ness"])
    parts = split_word("UNKINDness", table)
    assert parts.prefix_root == "UNKIND"
    assert parts.root_suffix == "KINDness"


words = st.text(alphabet="abcdeAB", min_size=3, max_size=20)
affix_sets = st.sets(st.text(alphabet="abcde", min_size=1, max_size=6), max_size=12)


@given(words, affix_sets, affix_sets)
def test_split_invariants(word, prefixes, suffixes):
    parts = split_word(word, AffixTable.from_lists(prefixes, suffixes))
    assert word.startswith(parts.prefix_root)
    assert word.endswith(parts.root_suffix)
    assert len(parts.prefix_root) + len(parts.root_suffix) >= len(word)
    assert len(parts.prefix_root) >= 3 and len(parts.root_suffix) >= 3
    # coverage: prefix_root plus the tail of root_suffix past the overlap is the word
    assert parts.prefix_root + parts.root_suffix[parts.overlap:] == word
