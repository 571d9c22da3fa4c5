#!/usr/bin/env python
"""gcfkit's command-line utility."""
import os
import sys


def main():
    """Select the settings environment and hand off to the click group."""
    if 'GCFKIT_SETTINGS_MODULE' not in os.environ:
        env = os.environ.get('GCFKIT_ENVIRONMENT', 'local').lower()
        settings_map = {
            'local': 'gcfkit.config.environments.local',
            'test': 'gcfkit.config.environments.test',
        }
        os.environ.setdefault('GCFKIT_SETTINGS_MODULE', settings_map.get(env, 'gcfkit.config.environments.local'))
    try:
        from gcfkit.cli import main as cli
    except ImportError as exc:
        raise ImportError(
            "Couldn't import gcfkit's dependencies. Are they installed "
            "(pip install -r requirements.txt) and is a virtual environment active?"
        ) from exc
    cli(args=sys.argv[1:], prog_name='manage.py')


if __name__ == '__main__':
    main()
