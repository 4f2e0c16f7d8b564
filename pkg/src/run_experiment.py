import argparse
import logging
import sys
from pathlib import Path

from dotenv import load_dotenv
from pydantic import ValidationError

from core import settings
from core.errors import ConfigError, ConvergenceError
from pipeline import ExperimentRunner, list_presets, load_config, load_preset
from schema import ExperimentConfig, Stage

load_dotenv()

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_CONVERGENCE = 3


def _parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        description="Temporal-mode extraction by seeded feedback iteration"
    )
    parser.add_argument("stage", choices=[s.value for s in Stage], help="Stage to run")
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--config", type=Path, help="Experiment JSON file")
    source.add_argument("--preset", type=str, help=f"Named preset: {', '.join(list_presets())}")
    parser.add_argument("--out", type=Path, help="Output directory (default: OUTPUT_DIR/<name>)")
    parser.add_argument("--threads", type=int, help="Worker threads for G sweeps")
    parser.add_argument("--seed", type=int, help="Monte Carlo seed, overrides the config")
    return parser.parse_args(argv)


def _resolve(args: argparse.Namespace) -> ExperimentConfig:
    if args.config is not None:
        config = load_config(args.config)
    elif args.preset is not None:
        config = load_preset(args.preset)
    else:
        config = ExperimentConfig()
    if args.seed is not None:
        measurement = config.measurement.model_copy(update={"rng_seed": args.seed})
        config = config.model_copy(update={"measurement": measurement})
    return config


def main(argv: list[str] | None = None) -> int:
    args = _parse_args(argv)
    try:
        config = _resolve(args)
        if args.threads is not None and args.threads < 1:
            raise ConfigError(f"--threads must be >= 1, got {args.threads}")
        out_dir = args.out or Path(config.output_dir or settings.OUTPUT_DIR) / config.name
        runner = ExperimentRunner(config, out_dir, threads=args.threads)
        stage = Stage(args.stage)
        if stage == Stage.DECOMPOSE:
            runner.run_decompose()
        elif stage == Stage.ITERATE:
            runner.run_iterate()
        elif stage == Stage.MEASURE:
            runner.run_measure()
        else:
            runner.run_all()
    except (ConfigError, ValidationError) as exc:
        logger.error(f"Configuration error: {exc}")
        return EXIT_CONFIG
    except ConvergenceError as exc:
        logger.error(f"Numerical failure: {exc}")
        return EXIT_CONVERGENCE
    logger.info(f"Stage '{args.stage}' finished; results in {out_dir}")
    return EXIT_OK


if __name__ == "__main__":
    root_logger = logging.getLogger()
    if root_logger.handlers:
        print(
            f"Warning: Root logger already has {len(root_logger.handlers)} handler(s) configured. "
            "basicConfig() will be ignored. "
            f"Current level: {logging.getLevelName(root_logger.level)}"
        )

    logging.basicConfig(level=settings.LOG_LEVEL.to_logging_level())
    sys.exit(main())
