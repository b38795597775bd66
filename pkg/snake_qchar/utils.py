# Copyright (C) 2024 snake-qchar contributors
#
# This program is free software; you can redistribute it and/or modify it
# under the terms of the GNU General Public License version 2 as published
# by the Free Software Foundation.
#
# This program is distributed in the hope that it will be useful, but
# WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the GNU General
# Public License for more details.
#
import json
import logging
import logging.config
import os
from concurrent.futures import ProcessPoolExecutor

import yaml

from .config import LOG_CONFIG, LOG_LEVEL
from .exceptions import InputError

logger = logging.getLogger(__name__)


def setup_logging(config_file: str = LOG_CONFIG, level: str = LOG_LEVEL) -> None:
    """
    Configure logging from a dictConfig yaml file, falling back to basicConfig.

    :param config_file: path of the logging yaml file
    :param level: level used by the fallback
    """
    if os.path.exists(config_file):
        with open(config_file, 'rt') as file:
            try:
                config = yaml.safe_load(file.read())
                logging.config.dictConfig(config)
            except Exception as e:
                print(e)
                print('Error while loading logging configuration from file "{}". Using defaults'
                      .format(config_file))
                logging.basicConfig(level=level)
    else:
        print('Logging file configuration does not exist: "{}". Using defaults.'.format(config_file))
        logging.basicConfig(level=level)


def read_json(filename: str):
    """
    Load a JSON document.

    :param filename: path to the file
    :return: decoded document
    :raises InputError: if the file is missing or not valid JSON
    """
    try:
        with open(filename, 'rt') as f:
            return json.load(f)
    except OSError as err:
        raise InputError("Could not read '{}': {}".format(filename, err)) from err
    except json.JSONDecodeError as err:
        raise InputError("File '{}' is not valid JSON: {}".format(filename, err)) from err


def dump_json(document) -> str:
    """Canonical JSON text: sorted keys, compact separators, trailing newline."""
    return json.dumps(document, sort_keys=True, separators=(',', ':')) + '\n'


def parallel_map(func, items, workers: int = 1) -> list:
    """
    Apply `func` to every item, in a process pool when workers > 1.

    Results are returned in the order of `items` regardless of the pool.

    :param func: picklable module-level function
    :param items: sequence of picklable arguments
    :param workers: number of processes
    :return: list of results
    """
    items = list(items)
    if workers is None or workers <= 1 or len(items) <= 1:
        return [func(item) for item in items]
    logger.debug("Fanning out {} tasks over {} workers".format(len(items), workers))
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(func, items))
