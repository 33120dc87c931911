'''
This file contains the loaders for sweep profiles, rule books and the base-case tables.
'''

import logging
import os
from functools import lru_cache
from importlib import resources
from typing import Dict, Optional

import yaml

logger = logging.getLogger(__name__)

PROFILES = ('default', 'extended')
DEFAULT_MAX_STATES = 10_000_000
MAX_STATES_ENV = 'OOOOOOB_MAX_STATES'


def packaged_file(package: str, name: str) -> str:
    '''Path of a data file shipped inside one of the oooooob sub-packages.'''
    return str(resources.files(f'oooooob.{package}').joinpath(name))


def load_yaml(path: str) -> Dict:
    with open(path, 'r', encoding='utf-8') as f:
        return yaml.load(f, Loader=yaml.FullLoader)


def profile_path(name_or_path: str) -> str:
    if name_or_path in PROFILES:
        return packaged_file('example_config_files', f'{name_or_path}.yaml')
    return name_or_path


def load_profile(name_or_path: str = 'default') -> Dict:
    '''
    Loads a sweep profile. A bare profile name ("default", "extended") resolves to the
    packaged file, anything else is read as a path.
    '''
    path = profile_path(name_or_path)
    if not os.path.exists(path):
        raise FileNotFoundError(f'Profile {name_or_path!r} not found at {path}')
    profile = load_yaml(path)
    if not isinstance(profile, dict) or 'sweeps' not in profile:
        raise ValueError(f'Profile {path} has no "sweeps" section')
    logger.debug(f'Loaded profile {path}')
    return profile


@lru_cache(maxsize=None)
def load_rule_book(name: str) -> Dict:
    '''Loads one of the packaged rule books (version_b_piles, version_c_piles, ...).'''
    return load_yaml(packaged_file('data', f'{name}.yaml'))


def resolve_max_states(flag: Optional[int] = None,
                       profile: Optional[Dict] = None) -> int:
    '''The solver budget: flag, then environment variable, then profile, then default.'''
    if flag is not None:
        return int(flag)
    env = os.environ.get(MAX_STATES_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f'{MAX_STATES_ENV} must be an integer, got {env!r}') from None
    if profile and profile.get('max_states') is not None:
        return int(profile['max_states'])
    return DEFAULT_MAX_STATES
