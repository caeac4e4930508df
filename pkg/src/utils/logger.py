import json
import logging
import os
import sys

LOGGER_NAME = "congruence_lab"

_configured = False


def get_logger(name: str) -> logging.Logger:
    """Child of the lab's logger; handlers live on the root of the hierarchy."""
    global _configured
    root = logging.getLogger(LOGGER_NAME)
    if not _configured:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
        root.addHandler(handler)
        root.setLevel(logging.WARNING)
        _configured = True
    if name.startswith(LOGGER_NAME):
        return logging.getLogger(name)
    return root.getChild(name.removeprefix("src."))


def set_level(level: str):
    logging.getLogger(LOGGER_NAME).setLevel(level.upper())


logger = get_logger("alerts")


def log_alert(report, alerts_file: str | None):
    """
    Append a failing or inconclusive report to the alerts file (JSON lines).
    A broken alerts file never stops a sweep.
    """
    if not alerts_file:
        return
    try:
        directory = os.path.dirname(alerts_file)
        if directory:
            os.makedirs(directory, exist_ok=True)

        entry = report.model_dump(mode="json")
        with open(alerts_file, "a", encoding="utf-8") as f:
            f.write(json.dumps(entry, ensure_ascii=False) + "\n")

        logger.info("[ALERT] %s %s saved to %s", report.check_id, report.verdict.value, alerts_file)

    except OSError as e:
        logger.error("[ALERT] could not write %s: %s", alerts_file, e)
