import logging
import os
import sys

import click

# Import configurations
from config import config

# Import commands
from commands.gen import gen_group
from commands.reach import reach_command
from commands.solve import solve_command
from commands.stats import stats_command
from commands.verify import verify_command


def configure_logging(app_config, level=None):
    logging.basicConfig(format=app_config.LOG_FORMAT, stream=sys.stderr)
    logging.getLogger().setLevel((level or app_config.LOG_LEVEL).upper())


def create_app(config_name=None):
    """Application factory: the exstab command group with every subcommand registered"""
    config_name = config_name or os.environ.get('EXSTAB_ENV') or 'default'
    app_config = config[config_name]

    @click.group('exstab', context_settings={'help_option_names': ['-h', '--help']})
    @click.option('--log-level', type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR'], case_sensitive=False),
                  default=None, help='Overrides EXSTAB_LOG_LEVEL.')
    @click.pass_context
    def app(ctx, log_level):
        """Exchange-stable and coalitional exchange-stable matchings"""
        ctx.obj = app_config
        configure_logging(app_config, log_level)

    # Register commands
    app.add_command(verify_command)
    app.add_command(solve_command)
    app.add_command(reach_command)
    app.add_command(gen_group)
    app.add_command(stats_command)
    return app


def main(argv=None, config_name=None):
    """Run the command line and return its exit code"""
    app = create_app(config_name)
    app_config = config[config_name or os.environ.get('EXSTAB_ENV') or 'default']
    try:
        code = app.main(args=argv, prog_name='exstab', standalone_mode=False)
    except click.UsageError as error:
        error.show()
        return app_config.EXIT_USAGE
    except click.FileError as error:
        error.show()
        return app_config.EXIT_DATA
    except click.ClickException as error:
        error.show()
        return app_config.EXIT_USAGE
    except click.Abort:
        click.echo('aborted', err=True)
        return app_config.EXIT_USAGE
    return code if isinstance(code, int) else app_config.EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
