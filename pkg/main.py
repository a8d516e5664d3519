#!/usr/bin/env python3
"""
GBDT Dirac engine - command line

Commands:
1. run <scenario-file>       - emit every requested artifact for a scenario
2. example <name>            - run a canned example (ee-dw0, ee-dw1, trivial-sa, trivial-ssa, sa-scalar)
3. verify <scenario-file>    - run the verification battery only
4. weyl <scenario-file> --z re,im ...  - Weyl table at the given spectral parameters

Exit code is 0 when all requested verifications pass, 1 when a check fails
and 2 on scenario or engine errors.
"""

import argparse
import logging
import sys
from typing import List, Optional

from config_package import GBDT_LOG_LEVEL, GBDT_OUTPUT_DIR
from matlin import GbdtError
from tools.scenario import get_supported_examples, load_scenario
from workflow import EXIT_ERROR, ScenarioWorkflow, exit_code


def parse_complex(text: str) -> complex:
    """'re,im' -> complex"""
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected re,im but got {text!r}")
    try:
        return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected re,im but got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gbdt", description="GBDT for Dirac systems: potentials, "
                                                              "solutions and Weyl functions")
    parser.add_argument("--output-dir", default=GBDT_OUTPUT_DIR, help="artifact root folder")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="emit every requested artifact for a scenario")
    run.add_argument("scenario", help="scenario file (.yaml, .yml or .json)")

    example = sub.add_parser("example", help="run a canned example")
    example.add_argument("name", choices=get_supported_examples())

    verify = sub.add_parser("verify", help="run the verification battery")
    verify.add_argument("scenario")

    weyl = sub.add_parser("weyl", help="Weyl table at given spectral parameters")
    weyl.add_argument("scenario")
    weyl.add_argument("--z", type=parse_complex, nargs="+", required=True, metavar="RE,IM")
    return parser


def configure_logging(level: str = GBDT_LOG_LEVEL) -> None:
    logging.basicConfig(level=getattr(logging, level.upper(), logging.INFO),
                        format="%(levelname)s %(name)s: %(message)s")


def main(argv: Optional[List[str]] = None) -> int:
    """Main application entry point"""
    args = build_parser().parse_args(argv)
    configure_logging()
    workflow = ScenarioWorkflow(output_dir=args.output_dir)

    try:
        if args.command == "example":
            print(f"🚀 Running canned example {args.name}...")
            results = workflow.cmd_example(args.name)
        else:
            print(f"📄 Loading scenario {args.scenario}...")
            scenario = load_scenario(args.scenario)
            if args.command == "run":
                results = workflow.run_scenario(scenario, command=f"run {args.scenario}")
            elif args.command == "verify":
                results = workflow.verify(scenario)
            else:
                results = workflow.weyl(scenario, args.z)
    except GbdtError as e:
        print(f"\n❌ {str(e)}")
        return EXIT_ERROR
    except KeyboardInterrupt:
        print("\n\n⏹️ Run interrupted by user")
        return EXIT_ERROR

    print(workflow.get_workflow_summary(results))
    print(f"📂 Outputs saved in: {results['output_folder']}")
    return exit_code(results)


if __name__ == "__main__":
    sys.exit(main())
