import csv
import io
import logging
import os
from dataclasses import dataclass

from dotenv import load_dotenv

from errors import InputError

# Load environment variables from .env file
load_dotenv()

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
CSV_HEADER = "timestamp,name,levelname,message\n"


@dataclass(frozen=True)
class Settings:
    log_dir: str = os.path.join(PROJECT_ROOT, "logs")
    log_file: str = "solver_log.csv"
    log_level: str = "INFO"
    max_ground: int = 12
    max_diverse_ground: int = 8
    max_r: int = 3
    sweep_workers: int = 4

    @property
    def log_path(self) -> str:
        return os.path.join(self.log_dir, self.log_file)


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"{name} must be an integer, got {raw!r}")
    if value < 1:
        raise InputError(f"{name} must be positive, got {value}")
    return value


def load_settings() -> Settings:
    log_dir = os.getenv("DIVERSE_LOG_DIR", "logs")
    if not os.path.isabs(log_dir):
        log_dir = os.path.join(PROJECT_ROOT, log_dir)
    return Settings(
        log_dir=log_dir,
        log_file=os.getenv("DIVERSE_LOG_FILE", "solver_log.csv"),
        log_level=os.getenv("DIVERSE_LOG_LEVEL", "INFO").upper(),
        max_ground=_int_env("DIVERSE_MAX_GROUND", 12),
        max_diverse_ground=_int_env("DIVERSE_MAX_DIVERSE_GROUND", 8),
        max_r=_int_env("DIVERSE_MAX_R", 3),
        sweep_workers=_int_env("DIVERSE_SWEEP_WORKERS", 4),
    )


class CsvLogFormatter(logging.Formatter):
    """Formats a record as one properly quoted CSV row."""

    def format(self, record: logging.LogRecord) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="")
        message = record.getMessage()
        if record.exc_info:
            message = f"{message} | {self.formatException(record.exc_info)}"
        writer.writerow([self.formatTime(record, "%Y-%m-%d %H:%M:%S"), record.name, record.levelname, message])
        return buffer.getvalue()


def get_logger(name: str, settings: Settings = None) -> logging.Logger:
    settings = settings or load_settings()
    logger = logging.getLogger(name)
    level = getattr(logging, settings.log_level, logging.INFO)
    logger.setLevel(level)
    # Configure file handler for CSV logging, only if no handlers are already configured
    if not logger.handlers:
        try:
            os.makedirs(settings.log_dir, exist_ok=True)
            path = settings.log_path
            if not os.path.exists(path) or os.path.getsize(path) == 0:
                with open(path, "w", encoding="utf-8") as f:
                    f.write(CSV_HEADER)
            file_handler = logging.FileHandler(path, mode="a", encoding="utf-8")
            file_handler.setLevel(level)
            file_handler.setFormatter(CsvLogFormatter())
            logger.addHandler(file_handler)
        except OSError:
            logger.addHandler(logging.NullHandler())
    return logger
