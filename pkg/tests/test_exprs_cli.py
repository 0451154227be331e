import json

import pytest

from jwcat.cli import main
from jwcat.exprs import ParseError, evaluate, parse, render_value
from jwcat.functors import Setup


@pytest.fixture(scope="module")
def setup():
    return Setup.create()


class TestParser:
    def test_objects(self):
        n = parse("P(1)")
        assert n.kind == "obj" and n.name == "P(1)"

    def test_nested_functors(self):
        n = parse("CK(D(P(2)))")
        assert n.kind == "apply" and n.name == "CK"
        assert n.child.name == "D" and n.child.child.name == "P(2)"

    def test_functor_vs_object_ambiguity(self):
        n = parse("P(P(1))")
        assert n.kind == "apply" and n.name == "P"
        assert n.child.kind == "obj" and n.child.name == "P(1)"

    def test_shift_suffixes(self):
        n = parse("P(2)<1>[2]")
        assert n.shifts == (("<", 1), ("[", 2))
        n = parse("D(P(1))<-3>")
        assert n.shifts == (("<", -3),)

    def test_morphism_atoms(self):
        n = parse("D(P(c))")
        assert n.child.child.kind == "map" and n.child.child.name == "c"

    def test_error_position(self):
        with pytest.raises(ParseError) as exc:
            parse("P(1) + P(2)")
        assert "position" in str(exc.value)
        with pytest.raises(ParseError):
            parse("Q(1)")
        with pytest.raises(ParseError):
            parse("D(P(1)")


class TestEvaluate:
    def test_object_value(self, setup):
        val = evaluate(setup, parse("D(P(1))"), (0, 8), 17)
        assert val.complex.window() == (0, 1)
        text = render_value(val)
        assert "P(2)" in text and "P(1)<-1>" in text

    def test_shifted_object(self, setup):
        val = evaluate(setup, parse("P(2)<1>[2]"), (0, 8), 17)
        assert val.complex.window() == (-2, -2)
        assert val.complex.term(-2)[0].shift == 1

    def test_projector_expression(self, setup):
        val = evaluate(setup, parse("P(P(1))"), (0, 6), 13)
        assert val.complex.tail is not None
        assert "q" in val.kclass.render()

    def test_morphism_expression(self, setup):
        val = evaluate(setup, parse("D(P(c))"), (0, 8), 17)
        text = render_value(val)
        assert "component" in text


class TestCli:
    def test_eval_exit_zero(self, capsys):
        code = main(["eval", "D(P(1))", "--window", "6"])
        assert code == 0
        out = capsys.readouterr().out
        assert "P(1)<-1>" in out

    def test_parse_error_is_usage_error(self, capsys):
        code = main(["eval", "P(1) %% nothing"])
        assert code == 3

    def test_bad_subcommand_usage_error(self):
        assert main(["frobnicate"]) == 3

    def test_window_too_small_rejected(self):
        assert main(["verify", "--window", "2"]) == 3

    def test_show_lists_and_loads(self, capsys):
        assert main(["show", "list"]) == 0
        names = capsys.readouterr().out.split()
        assert "algebra_two_vertex" in names
        assert main(["show", "algebra_two_vertex"]) == 0
        out = capsys.readouterr().out
        assert "relations: ba" in out

    def test_show_missing_fixture(self):
        assert main(["show", "no_such_thing"]) == 3

    def test_verify_selection_and_json(self, capsys):
        code = main(["verify", "--window", "6", "--only", "algebra-sanity",
                     "--format", "json"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["schema"] == "jwcat-report-v1"
        assert [c["name"] for c in payload["checks"]] == ["algebra-sanity"]

    def test_json_report_deterministic(self):
        from jwcat.verify import VerificationConfig, run_suite
        cfg = VerificationConfig(window=6, only=("algebra-sanity", "module-duals"))
        a = run_suite(cfg).to_json(with_timings=False)
        b = run_suite(cfg).to_json(with_timings=False)
        assert a == b

    def test_env_window(self, monkeypatch, capsys):
        monkeypatch.setenv("JWCAT_WINDOW", "6")
        code = main(["verify", "--only", "algebra-sanity", "--format", "json"])
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["config"]["window"] == 6


class TestFixtureRoundTrip:
    def test_bit_exact_roundtrip(self, tmp_path):
        from jwcat.fixtures import load_fixture, write_bundled_fixtures
        write_bundled_fixtures(tmp_path)
        for f in sorted(tmp_path.iterdir()):
            kind, obj = load_fixture(str(f))
            assert kind in ("algebra", "module", "complex")

    def test_corrupted_fixture_rejected(self, tmp_path):
        import json as _json
        from jwcat.fixtures import load_fixture
        blob = {"kind": "algebra",
                "payload": {"name": "B",
                            "quiver": {"vertices": ["1", "2"],
                                       "arrows": [{"name": "a", "source": "1",
                                                   "target": "2", "degree": 1},
                                                  {"name": "b", "source": "2",
                                                   "target": "1", "degree": 1}]},
                            "relations": [["b", "a"]], "d_max": 4,
                            "assertions": {"graded_dimensions": [9, 9, 9]}}}
        p = tmp_path / "bad.json"
        p.write_text(_json.dumps(blob))
        with pytest.raises(Exception):
            load_fixture(str(p))
