"""
Loggers for bihole: warnings and errors go to a rotating .log file and to stderr
"""
import logging
import os
from logging.handlers import RotatingFileHandler

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(filename)s - %(message)s'
LOG_FILE_MAX_BYTES = 1000000
LOG_FILE_BACKUPS = 2


def _attach(logger, handler, level, formatter):
    handler.setLevel(level)
    handler.setFormatter(formatter)
    logger.addHandler(handler)


def create_logger(log_dir, filename, name='bihole', level='WARNING'):
    """
    Creates named logger writing to log_dir/filename and to stderr

    :param log_dir: directory for the log files, created if missing
    :param filename: log file name inside log_dir
    :param name: logger name, handlers are attached only once per name
    :param level: logger level name
    :return: logging.Logger
    """
    logger = logging.getLogger(name)
    logger.setLevel(level)
    if logger.handlers:
        return logger
    logger.propagate = False

    formatter = logging.Formatter(LOG_FORMAT)
    os.makedirs(log_dir, exist_ok=True)

    # file only opened on the first record
    file_handler = RotatingFileHandler(
        filename=os.path.join(log_dir, filename),
        maxBytes=LOG_FILE_MAX_BYTES,
        backupCount=LOG_FILE_BACKUPS,
        delay=True
    )
    _attach(logger, file_handler, logging.WARNING, formatter)

    # stdout is kept for reports
    _attach(logger, logging.StreamHandler(), logging.DEBUG, formatter)

    return logger
