import logging

from src.app.main.components.edgmat.services import run_gradcheck
from src.app.main.exceptions.handlers import EXIT_OK, EXIT_FAILURE
from ..pipeline import ensure_output_dir, write_key_values
from ..router import command_router
from ..schemas import RunConfig, GRADCHECK_FILE

_logger = logging.getLogger(__name__)


@command_router.command("gradcheck")
def cmd_gradcheck(config: RunConfig) -> int:
    with command_router.stage("gradcheck", f"{config.gradcheck_graphs} random graphs"):
        errors = run_gradcheck(config.gradcheck_graphs, seed=config.seed)

    worst = max(errors.values(), default=0.0)
    passed = worst < config.gradcheck_tolerance
    out = ensure_output_dir(config)

    with command_router.stage("export", out):
        write_key_values(config.output_path(GRADCHECK_FILE), {
            "graphs": config.gradcheck_graphs,
            "tolerance": config.gradcheck_tolerance,
            "max_error": worst,
            "passed": passed,
            **{f"error.{group}": error for group, error in sorted(errors.items())}
        })

    if not passed:
        failing = [group for group, error in errors.items() if error >= config.gradcheck_tolerance]
        _logger.error(f"gradcheck failed at stage gradcheck: max relative error {worst:.3e} in {', '.join(failing)}")
        return EXIT_FAILURE

    _logger.info(f"Gradient check passed: max relative error {worst:.3e}")
    return EXIT_OK
