"""
Settings for SINRsched.

Values are read from a `sinrschedrc` file. The first file found in
    ./sinrschedrc
    ~/.sinrschedrc
    <package directory>/sinrschedrc
is used. Access them as attributes, e.g. settings.numerics.rel_tol.

For a local change, copy the current settings, modify and push them
>>> s = settings.get_settings()
>>> s.oracle.max_partition = 8
>>> with settings.temp_settings(s):
...     run_something()
"""
import collections
import configparser
import contextlib
import copy
import os


class SettingsStruct(object):
    """ A section of the settings file, keys become attributes. """
    def __init__(self, **kwargs):
        self.__dict__.update(kwargs)

    def __iter__(self):
        return iter(self.__dict__.items())

    def __repr__(self):
        return "SettingsStruct(%s)" % ", ".join(
            "%s=%r" % (k, v) for k, v in sorted(self.__dict__.items()))


class SettingsManager(object):
    def __init__(self, cur, stack=None):
        self._cur = cur
        self._stack = [] if stack is None else stack

    def __getattr__(self, name):
        try:
            return getattr(self._cur, name)
        except AttributeError:
            raise AttributeError("Unknown setting section '%s'" % name)

    def push(self, extra_dict=None):
        self._stack.append(self._cur)
        self._cur = copy.deepcopy(self._cur) if extra_dict is None else extra_dict

    def pop(self):
        rtn = self._cur
        self._cur = self._stack.pop()
        return rtn

    def get_settings(self):
        return copy.deepcopy(self._cur)

    @contextlib.contextmanager
    def temp_settings(self, tmp_settings):
        self.push(tmp_settings)
        try:
            yield
        finally:
            self.pop()


def _parse(value):
    """ Convert a string from the rc file to bool, int or float when possible. """
    if value in ('True', 'true'):
        return True
    if value in ('False', 'false'):
        return False
    for cast in (int, float):
        try:
            return cast(value)
        except ValueError:
            pass
    return value


def _namedtuplify(mapping):
    sections = collections.OrderedDict()
    for section, items in mapping.items():
        sections[section] = SettingsStruct(**{k: _parse(v) for k, v in items.items()})
    return SettingsStruct(**sections)


def _settings_file():
    candidates = [os.path.join(os.getcwd(), 'sinrschedrc'),
                  os.path.join(os.path.expanduser('~'), '.sinrschedrc'),
                  os.path.join(os.path.dirname(__file__), 'sinrschedrc')]
    for path in candidates:
        if os.path.isfile(path):
            return path
    raise RuntimeError("No sinrschedrc settings file found in %s" % candidates)


def read_config_file(path=None):
    """ Read the rc file into a SettingsStruct of SettingsStructs. """
    cfg = configparser.ConfigParser()
    cfg.optionxform = str  # keep key case
    cfg.read(path or _settings_file())
    return _namedtuplify({s: dict(cfg.items(s)) for s in cfg.sections()})


settings = SettingsManager(read_config_file())
