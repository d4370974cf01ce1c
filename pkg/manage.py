#!/usr/bin/env python
"""Django's command-line utility; also installed as the `gha` console script."""
import os
import sys

banner = r'''
        _
   __ _| |__   __ _
  / _` | '_ \ / _` |
 | (_| | | | | (_| |
  \__, |_| |_|\__,_|
  |___/
'''


def main():
    """Run administrative tasks."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'system.settings')
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Are you sure it's installed and "
            "available on your PYTHONPATH environment variable? Did you "
            "forget to activate a virtual environment?"
        ) from exc
    execute_from_command_line(sys.argv)


if __name__ == '__main__':
    if len(sys.argv) > 1 and sys.argv[1] == 'runserver':
        print(banner, file=sys.stderr)
    main()
