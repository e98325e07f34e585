import os
import sys


def main(argv=None):
    """
    Console entry point: `fapk gen|solve|bench ...`, also used by manage.py.
    :param argv: full argument vector, program name first
    """
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'fapk.settings')
    from django.core.management import execute_from_command_line
    argv = ['fapk'] + sys.argv[1:] if argv is None else list(argv)
    execute_from_command_line(argv)


if __name__ == '__main__':
    main()
