# superal/utils/logging_setup.py
import logging, os, sys
from superal.core.config import settings

def get_logger(name: str = "superal"):
    logger = logging.getLogger(name)
    if logger.handlers:
        return logger
    level = settings.log_level or "INFO"
    logger.setLevel(getattr(logging, level.upper(), logging.INFO))
    fmt = logging.Formatter("%(asctime)s | %(levelname)s | %(message)s")
    # stdout is reserved for reports
    ch = logging.StreamHandler(sys.stderr)
    ch.setFormatter(fmt)
    logger.addHandler(ch)
    if settings.log_dir:
        os.makedirs(settings.log_dir, exist_ok=True)
        fh = logging.FileHandler(os.path.join(settings.log_dir, "superal.log"), encoding="utf-8")
        fh.setFormatter(fmt)
        logger.addHandler(fh)
    logger.propagate = False
    return logger
