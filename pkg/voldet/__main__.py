import os
import sys

from voldet.config import ConfigLoader


def main(argv=None):
    toolkit = ConfigLoader(os.environ.get('VOLDET_CONFIG', 'config.yml')).build()
    return toolkit.run(sys.argv[1:] if argv is None else argv)


if __name__ == '__main__':
    sys.exit(main())
