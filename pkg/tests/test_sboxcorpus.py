import json

import pytest

from cdifflab.cdiff import cddt_table, du
from cdifflab.gf import AES_MODULUS
from cdifflab.sboxcorpus import (PINNED_MODULI, REPORT_HEADER, SboxFormatError, SboxRecord,
                                 aes_sbox_reference, builtin, builtin_corpus, corpus_report,
                                 field_for_width, load_sbox, report_csv, sbox_report)


def test_corpus_shape():
    corpus = builtin_corpus()
    assert [r.name for r in corpus] == ["Rectangle", "Serpent-3", "APN", "Fides", "AES", "Skipjack"]
    assert [r.n for r in corpus] == [4, 4, 6, 6, 8, 8]
    assert all(r.provenance for r in corpus)
    assert all(r.is_bijective for r in corpus)
    assert "STAND-IN" in builtin("Fides").provenance


def test_aes_table_matches_definition():
    S = builtin("AES").table
    assert list(S) == aes_sbox_reference()
    assert S[0x00] == 0x63 and S[0x53] == 0xED and S[0xFF] == 0x16


def test_known_entries():
    assert builtin("Skipjack").table[:4] == (0xA3, 0xD7, 0x09, 0x83)
    assert builtin("Rectangle").table == (6, 5, 12, 10, 1, 14, 7, 9, 11, 0, 3, 13, 8, 15, 4, 2)
    assert builtin("Serpent-3").table == (8, 6, 7, 9, 3, 12, 10, 15, 13, 1, 14, 4, 0, 11, 5, 2)


@pytest.mark.parametrize("name,expect", [("AES", 4), ("Skipjack", 12), ("Rectangle", 4),
                                         ("Serpent-3", 4), ("APN", 2), ("Fides", 2)])
def test_du_column(name, expect):
    assert du(builtin(name).function()) == expect


def test_pinned_fields():
    assert field_for_width(8).modulus == AES_MODULUS
    assert field_for_width(4).modulus == (1, 1, 0, 0, 1)
    assert field_for_width(6).modulus == (1, 1, 0, 0, 0, 0, 1)
    assert set(PINNED_MODULI) == {4, 6, 8}


def test_load_valid_files(tmp_path):
    p = tmp_path / "id.json"
    p.write_text(json.dumps({"name": "id", "n": 4, "table": list(range(16))}))
    rec = load_sbox(p)
    assert rec.n == 4 and rec.is_bijective
    p2 = tmp_path / "aes.json"
    p2.write_text(builtin("AES").to_json())
    assert load_sbox(p2).is_bijective and load_sbox(p2).n == 8
    p3 = tmp_path / "const.json"
    p3.write_text(json.dumps({"name": "c", "n": 2, "table": [1, 1, 1, 1]}))
    assert not load_sbox(p3).is_bijective


def test_load_errors(tmp_path):
    p = tmp_path / "short.json"
    p.write_text(json.dumps({"name": "s", "n": 4, "table": list(range(15))}))
    with pytest.raises(SboxFormatError, match="15"):
        load_sbox(p)
    p.write_text(json.dumps({"name": "s", "n": 4, "table": list(range(15)) + [16]}))
    with pytest.raises(SboxFormatError, match="entry 15"):
        load_sbox(p)
    p.write_text("{not json")
    with pytest.raises(SboxFormatError):
        load_sbox(p)
    p.write_text(json.dumps({"name": "s", "table": []}))
    with pytest.raises(SboxFormatError):
        load_sbox(p)
    with pytest.raises(SboxFormatError):
        SboxRecord("x", 2, (0, 1, 2, True))


def test_four_bit_rows():
    assert sbox_report(builtin("Rectangle"), threads=1).row() == (4, 5, 7)
    assert sbox_report(builtin("Serpent-3"), threads=1).row() == (4, 6, 5)


def test_row_sums_for_corpus():
    for rec in builtin_corpus()[:4]:
        fn = rec.function()
        for c in (0, 1, 2, fn.field.q - 1):
            assert (cddt_table(fn, c).counts.sum(axis=1) == fn.field.q).all()


def test_csv_layout():
    reps = corpus_report(builtin_corpus()[:2], threads=1)
    lines = report_csv(reps).splitlines()
    assert lines[0].split(",") == REPORT_HEADER
    assert lines[1] == "Rectangle,4,5,7"
    d = reps[0].to_dict()
    assert d["modulus"] == [1, 1, 0, 0, 1] and set(d["per_i"]) == {"0", "1", "2", "3"}


def test_parallel_report_is_deterministic():
    recs = builtin_corpus()[:4]
    a = [r.row() for r in corpus_report(recs, threads=1)]
    b = [r.row() for r in corpus_report(recs, threads=4)]
    assert a == b
