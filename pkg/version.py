# Version number of the package, for setup.py.
#
# Inside a git checkout this is ``git describe`` without the leading "v"
# (v0.1.0-3-gabcdef becomes 0.1.0.post3+gabcdef). Release tarballs carry no
# .git directory, so the last value seen is kept in the VERSION file and
# read back from there.
from subprocess import PIPE, CalledProcessError, run

VERSION_FILE = 'VERSION'

__all__ = ('get_git_version',)


def call_git_describe():
    try:
        result = run(['git', 'describe', '--tags', '--always'], stdout=PIPE, stderr=PIPE, check=True)
    except (OSError, CalledProcessError):
        return None
    return result.stdout.decode('utf-8').strip() or None


def to_pep440(described):
    described = described.lstrip('v')
    parts = described.split('-')
    if len(parts) == 3:
        return '%s.post%s+%s' % tuple(parts)
    return described


def read_release_version():
    try:
        with open(VERSION_FILE) as f:
            return f.readline().strip() or None
    except OSError:
        return None


def write_release_version(version):
    with open(VERSION_FILE, 'w') as f:
        f.write('%s\n' % version)


def get_git_version():
    release_version = read_release_version()
    described = call_git_describe()
    version = to_pep440(described) if described else release_version
    if version is None:
        raise ValueError("Cannot find the version number!")
    if version != release_version:
        write_release_version(version)
    return version


if __name__ == '__main__':
    print(get_git_version())
