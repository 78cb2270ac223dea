import argparse

from relmin.config import configure_logging, load_settings
from relmin.report.dumper import ReportDumper
from relmin.verify.suites import Suite, VerifyConfig, render_report, run_verify


def verify_command(argv=None) -> int:
    settings = load_settings()
    parser = argparse.ArgumentParser(
        prog="relmin verify",
        description="Run a seeded property suite and print its JSON report"
    )
    parser.add_argument(
        "--suite",
        required=True,
        choices=[s.value for s in Suite],
        help="Property suite to run"
    )
    parser.add_argument("--samples", type=int, default=settings.samples, help="Samples per property")
    parser.add_argument("--seed", type=int, default=settings.seed, help="Seed of the sampler")
    parser.add_argument("--level", type=int, default=settings.level, help="Cayley-Dickson level of the scalars")
    parser.add_argument("--dim", type=int, default=settings.dim, help="Heisenberg dimension n")
    parser.add_argument(
        "--coeff-magnitude",
        type=int,
        default=settings.coeff_magnitude,
        help="Largest numerator / denominator magnitude drawn"
    )
    parser.add_argument("--json-out", help="Also write the JSON report to this path")
    parser.add_argument("--csv-out", help="Also write the per-property table as CSV to this path")
    parser.add_argument(
        "--save",
        action="store_true",
        help="Write report.json, properties.csv and summary.txt under the report directory"
    )
    parser.add_argument("--report-dir", default=settings.report_directory, help="Report directory for --save")
    parser.add_argument("--log-level", default=settings.log_level, help="Logging level (stderr)")

    args = parser.parse_args(argv)
    configure_logging(args.log_level)

    config = VerifyConfig(
        suite=Suite(args.suite),
        samples=args.samples,
        seed=args.seed,
        level=args.level,
        dim=args.dim,
        coeff_magnitude=args.coeff_magnitude,
    )
    report = run_verify(config)
    print(render_report(report))

    dumper = ReportDumper(report, args.report_dir)
    if args.json_out:
        dumper.dump_json(save=True, path=args.json_out)
    if args.csv_out:
        dumper.dump_csv(save=True, path=args.csv_out)
    if args.save:
        dumper.dump_json(save=True)
        dumper.dump_csv(save=True)
        dumper.dump_text(save=True)
    return report["exit"]
