import json

import pytest

from stratikit import config
from stratikit.errors import InputError
from stratikit.families import catalogue_example
from stratikit.fields import GF, QQ
from stratikit.verify import (
    PROPERTIES,
    as_record,
    invariant_isomorphic,
    invariant_profile,
    verify_all,
    verify_property,
)


@pytest.fixture(scope="module")
def field():
    return GF(32003)


def _steps(transcript, name):
    return [s for s in transcript["steps"] if s["name"] == name]


def test_transcript_shape_and_serialization(field):
    tr = verify_property("MAIN", catalogue_example("rad-square-zero-2v", field))
    assert tr["schema"] == 1
    assert tr["property"] == "MAIN"
    assert tr["input"] == "rad-square-zero-2v"
    assert tr["field"] == {"p": 32003}
    assert tr["order"] == [0, 1]
    assert tr["cutoff"] == 12
    assert tr["verdict"] == "pass"
    round_trip = json.loads(json.dumps(tr, sort_keys=True))
    assert round_trip == tr
    # the equivalence holds with all three statements false
    values = [
        _steps(tr, "statement 1: Gorenstein")[0]["value"],
        _steps(tr, "statement 2: tilting = cotilting")[0]["value"],
        _steps(tr, "statement 3: tilting is costandardly filtered")[0]["value"],
    ]
    assert values == [False, False, False]


def test_main_passes_across_catalogue(field):
    for ident in (
        "cent-2-1",
        "cent-3-1",
        "cent-4-13",
        "gigs-kxy",
        "recollement-3v",
        "schur-A2",
        "schur-A3",
        "brauer-B1",
    ):
        tr = verify_property("MAIN", catalogue_example(ident, field))
        assert tr["verdict"] == "pass", ident


def test_gates_on_non_gorenstein_input(field):
    rec = catalogue_example("rad-square-zero-2v", field)
    for prop in ("GP_FILT", "PFIN_CAP", "MAZOV", "DOMDIM_T", "RINGEL_GIGS",
                 "SELF_DUAL_CENT", "FROB_ENDO"):
        tr = verify_property(prop, rec)
        assert tr["verdict"] == "hypothesis-not-met", prop
    # FROB_ENDO still records the endomorphism checks informationally:
    # End(standard 0) is the two-dimensional local algebra, hence Frobenius.
    tr = verify_property("FROB_ENDO", rec)
    step = _steps(tr, "End(standard 0) is Frobenius")[0]
    assert step["value"] is True
    assert step["endo_dimension"] == 2


def test_frob_endo_chain_on_gorenstein_inputs(field):
    for ident in ("cent-3-1", "gigs-kxy", "recollement-3v"):
        tr = verify_property("FROB_ENDO", catalogue_example(ident, field))
        assert tr["verdict"] == "pass", ident
        chain = [s for s in tr["steps"] if s["name"].startswith("quotient by stratum")]
        assert chain, ident
        for s in chain:
            assert s["value"]["properly_stratified"] is True
            assert s["value"]["gorenstein"] is True


def test_gp_filt_and_pfin_cap(field):
    for ident in ("cent-3-1", "cent-4-13", "gigs-kxy", "recollement-3v", "schur-A3"):
        for prop in ("GP_FILT", "PFIN_CAP"):
            tr = verify_property(prop, catalogue_example(ident, field))
            assert tr["verdict"] == "pass", (ident, prop)
            assert tr["steps"], (ident, prop)


def test_mazov_and_domdim_on_gigs_example(field):
    rec = catalogue_example("gigs-kxy", field)
    tr = verify_property("MAZOV", rec)
    assert tr["verdict"] == "pass"
    step = _steps(tr, "Gorenstein dimension equals twice pd(tilting)")[0]
    assert step["gorenstein"] == 4 and step["pd_tilting"] == 2

    tr = verify_property("DOMDIM_T", rec)
    assert tr["verdict"] == "pass"
    step = _steps(tr, "dominant dimension of algebra is twice that of tilting")[0]
    assert step["algebra"] == 2 and step["tilting"] == 1

    tr = verify_property("RINGEL_GIGS", rec)
    assert tr["verdict"] == "hypothesis-not-met"
    gate = [h for h in tr["hypotheses"] if h["name"] == "minimal Auslander-Gorenstein"]
    assert gate and gate[0]["holds"] is False


def test_domdim_on_schur_block(field):
    tr = verify_property("DOMDIM_T", catalogue_example("schur-A3", field))
    assert tr["verdict"] == "pass"
    step = _steps(tr, "dominant dimension of algebra is twice that of tilting")[0]
    assert step["algebra"] == 4 and step["tilting"] == 2


def test_ringel_gigs_on_centraliser_algebras(field):
    tr = verify_property("RINGEL_GIGS", catalogue_example("cent-3-1", field))
    assert tr["verdict"] == "pass"
    assert _steps(tr, "Ringel dual dimension")[0]["value"] == 9
    assert _steps(tr, "syzygy-partner dimension")[0]["value"] == 9

    tr = verify_property("RINGEL_GIGS", catalogue_example("cent-4-13", field))
    assert tr["verdict"] == "pass"
    assert _steps(tr, "Ringel dual dimension")[0]["value"] == 18


def test_self_dual_cent(field):
    expectations = {
        "cent-2-1": (True, "pass"),
        "cent-3-1": (False, "pass"),
        "cent-4-13": (True, "pass"),
    }
    for ident, (criterion, verdict) in expectations.items():
        tr = verify_property("SELF_DUAL_CENT", catalogue_example(ident, field))
        assert tr["verdict"] == verdict, ident
        step = _steps(tr, "palindromic chain-length criterion")[0]
        assert step["value"] is criterion
        computed = _steps(tr, "algebra is invariant-isomorphic to its Ringel dual")[0]
        assert computed["value"] is criterion
    tr = verify_property("SELF_DUAL_CENT", catalogue_example("schur-A2", field))
    assert tr["verdict"] == "hypothesis-not-met"


def test_invariant_profile_and_isomorphism(field):
    from test_quiver import nilpotent_centralizer_small

    cent = catalogue_example("cent-3-1", field)["algebra"]
    quiver_presentation = nilpotent_centralizer_small(field)
    same, detail = invariant_isomorphic(cent, quiver_presentation)
    assert same is True

    other = catalogue_example("cent-2-1", field)["algebra"]
    same, detail = invariant_isomorphic(cent, other)
    assert same is False
    assert "dimension" in detail["mismatch"]

    profile = invariant_profile(cent)
    assert profile["dimension"] == 6
    assert profile["vertices"] == 2
    assert profile["pair_matrix"][0] == "canonical"
    assert profile["flags"]["gendo_symmetric"] is True


def test_verify_all_and_input_validation(field):
    rec = catalogue_example("brauer-B1", field)
    transcripts = verify_all(rec, properties=("MAIN", "MAZOV"))
    assert [t["property"] for t in transcripts] == ["MAIN", "MAZOV"]
    assert all(t["verdict"] == "pass" for t in transcripts)

    with pytest.raises(InputError):
        verify_property("NO_SUCH_PROPERTY", rec)
    with pytest.raises(InputError):
        as_record({"kind": "broken"})

    # a bare algebra with an explicit order is accepted
    algebra = catalogue_example("cent-3-1", field)["algebra"]
    tr = verify_property("MAIN", algebra, order=(1, 0))
    assert tr["verdict"] == "pass"
    assert tr["input"] == "ad-hoc"


def test_seed_is_recorded(field):
    config.set_seed(7)
    try:
        tr = verify_property("MAIN", catalogue_example("cent-3-1", field))
        assert tr["seed"] == 7
    finally:
        config.set_seed(0)


def test_verdicts_stable_across_fields():
    for fld in (GF(32003), GF(101), QQ):
        tr = verify_property("MAIN", catalogue_example("cent-3-1", fld))
        assert tr["verdict"] == "pass"
        tr = verify_property("SELF_DUAL_CENT", catalogue_example("cent-3-1", fld))
        assert tr["verdict"] == "pass"
