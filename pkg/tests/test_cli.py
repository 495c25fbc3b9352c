import json
import subprocess
import sys

import pytest

from aircost.cli import main


def run(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestPcyCommand:
    def test_published_row_value(self, capsys):
        code, out, err = run(
            capsys, "pcy", "--region", "CA", "--days", "365",
            "--mode", "table5", "Coway Airmega 250",
        )
        assert code == 0
        assert "1155.77" in out

    def test_zero_days(self, capsys):
        code, out, _ = run(
            capsys, "pcy", "--days", "0", "--mode", "table5", "Coway Airmega 250",
        )
        assert code == 0
        assert "0.00" in out

    def test_unknown_unit_exits_2(self, capsys):
        code, out, err = run(capsys, "pcy", "--region", "CA", "No Such Unit")
        assert code == 2
        assert "No Such Unit" in err

    def test_partial_still_computes_known_units(self, capsys):
        code, out, err = run(
            capsys, "pcy", "--mode", "table5", "Coway Airmega 250", "No Such Unit",
        )
        assert code == 2
        assert "1155.77" in out
        assert "No Such Unit" in err

    def test_defaults_cover_all_units(self, capsys):
        code, out, _ = run(capsys, "pcy", "--format", "csv")
        assert code == 0
        assert len(out.strip().splitlines()) == 54  # header + 53 units


class TestRankCommand:
    def test_top_of_table(self, capsys):
        code, out, _ = run(
            capsys, "rank", "--region", "CA", "--mode", "table5", "--top", "5",
        )
        assert code == 0
        first_data_row = out.splitlines()[1]
        assert first_data_row.startswith("1")
        assert "Medify MA-112" in first_data_row
        assert "660.99" in first_data_row

    def test_json_format(self, capsys):
        code, out, _ = run(
            capsys, "rank", "--region", "CA", "--mode", "table5",
            "--top", "3", "--format", "json",
        )
        payload = json.loads(out)
        assert payload["parameters"]["mode"] == "table5"
        assert payload["results"][0]["id"] == "Medify MA-112"
        assert payload["results"][0]["below_threshold"] == "true"

    def test_output_is_byte_stable(self, capsys):
        _, first, _ = run(capsys, "rank", "--mode", "table5", "--format", "csv")
        _, second, _ = run(capsys, "rank", "--mode", "table5", "--format", "csv")
        assert first == second


class TestWhatIfCommand:
    def test_renormalized_ranking(self, capsys, catalog):
        code, out, _ = run(
            capsys, "whatif", "--home-sqft", "1200", "--region", "TX",
            "--days", "90", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["parameters"]["home_sqft"] == 1200.0
        from aircost.catalog import CostModelParams
        from aircost.engine import CostContext, pcy

        ctx = CostContext(
            rate_usd_per_kwh=0.128,
            t_operate_days=90.0,
            params=CostModelParams(reference_area_sqft=1200.0),
        )
        by_id = {r["id"]: r for r in payload["results"]}
        direct = pcy(catalog.get("Medify MA-112"), ctx)
        assert by_id["Medify MA-112"]["total_usd_per_year"] == f"{direct.total_usd_per_year:.2f}"

    def test_home_size_doubling_doubles_totals(self, capsys):
        _, base, _ = run(
            capsys, "whatif", "--home-sqft", "2500", "--mode", "table5",
            "--format", "json",
        )
        _, doubled, _ = run(
            capsys, "whatif", "--home-sqft", "5000", "--mode", "table5",
            "--format", "json",
        )
        for small, big in zip(json.loads(base)["results"], json.loads(doubled)["results"]):
            assert small["id"] == big["id"]
            assert float(big["total_usd_per_year"]) == pytest.approx(
                2 * float(small["total_usd_per_year"]), abs=0.011
            )


class TestBreakdownCommand:
    def test_shares(self, capsys):
        code, out, _ = run(
            capsys, "breakdown", "--region", "CA", "--format", "json",
            "Coway Airmega 250",
        )
        payload = json.loads(out)
        row = payload["results"][0]
        shares = [
            float(row["initial_share"]),
            float(row["maintenance_share"]),
            float(row["electricity_share"]),
        ]
        # each share is printed to 6 decimals, so the sum can be off by 1.5e-6
        assert sum(shares) == pytest.approx(1.0, abs=2e-6)
        assert shares[0] == pytest.approx(0.1447, abs=1e-3)


class TestSweepCommand:
    def test_median_range_reported(self, capsys):
        code, out, _ = run(capsys, "sweep", "--mode", "table5")
        assert code == 0
        assert "median range: 872.22" in out

    def test_json_lists_every_region(self, capsys, rates):
        _, out, _ = run(capsys, "sweep", "--mode", "table5", "--format", "json")
        payload = json.loads(out)
        assert {r["region"] for r in payload["results"]} == set(rates.regions())
        assert payload["parameters"]["median_range_usd"] == "872.22"


class TestAqiScheduling:
    def test_rank_with_calendar_file(self, capsys, tmp_path, catalog):
        aqi = tmp_path / "aqi.csv"
        aqi.write_text("region,days_over_100\nLA,57\nKings,110\n")
        code, out, _ = run(
            capsys, "rank", "--region", "CA", "--mode", "table5",
            "--aqi", str(aqi), "--county", "LA", "--format", "json",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["parameters"]["t_operate_days"] == 57.0

    def test_multi_county_file_requires_choice(self, capsys, tmp_path):
        aqi = tmp_path / "aqi.csv"
        aqi.write_text("region,days_over_100\nLA,57\nKings,110\n")
        code, _, err = run(capsys, "rank", "--aqi", str(aqi))
        assert code == 1
        assert "--county" in err

    def test_unknown_county(self, capsys, tmp_path):
        aqi = tmp_path / "aqi.csv"
        aqi.write_text("region,days_over_100\nLA,57\n")
        code, _, err = run(capsys, "rank", "--aqi", str(aqi), "--county", "Atlantis")
        assert code == 1
        assert "Atlantis" in err


class TestReproduceCommand:
    def test_text_report(self, capsys):
        code, out, _ = run(capsys, "reproduce")
        assert code == 0
        assert "48 REPRODUCED, 5 DISCREPANCY" in out
        assert "median_compat" in out

    def test_json_report(self, capsys):
        code, out, _ = run(capsys, "reproduce", "--format", "json")
        payload = json.loads(out)
        assert len(payload["rows"]) == 53


class TestErrorsAndExitCodes:
    def test_conflicting_scenario_flags_are_fatal(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["rank", "--region", "CA", "--rate", "0.2"])
        assert exc.value.code == 1

    def test_unknown_region_is_fatal(self, capsys):
        code, _, err = run(capsys, "rank", "--region", "ZZ")
        assert code == 1
        assert "ZZ" in err

    def test_missing_catalog_file_is_fatal(self, capsys):
        code, _, err = run(capsys, "rank", "--catalog", "/nonexistent/file.csv")
        assert code == 1

    def test_env_var_selects_data_dir(self, capsys, tmp_path, monkeypatch):
        from aircost.datafiles import bundled_data_dir

        (tmp_path / "rates.csv").write_text(
            (bundled_data_dir() / "rates.csv").read_text()
        )
        (tmp_path / "table5_catalog.csv").write_text(
            "\n".join(
                [
                    ",".join(
                        [
                            "brand", "model", "model_year", "initial_cost_usd",
                            "cadr_cfm", "rated_watts", "filter_price_usd",
                            "replacement_interval_days", "annual_filter_cost_usd",
                            "expected_pcy_usd",
                        ]
                    ),
                    "Tiny,Fleet,,10,100,5,,,12,",
                ]
            )
            + "\n"
        )
        monkeypatch.setenv("AIRCOST_DATA", str(tmp_path))
        code, out, _ = run(capsys, "rank", "--format", "csv")
        assert code == 0
        assert "Tiny Fleet" in out
        assert len(out.strip().splitlines()) == 2  # header + the one unit

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "aircost", "pcy", "--mode", "table5",
             "Coway Airmega 250"],
            capture_output=True, text=True, timeout=120,
        )
        assert proc.returncode == 0
        assert "1155.77" in proc.stdout
