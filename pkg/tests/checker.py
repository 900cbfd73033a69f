from dateutil.parser import isoparse
from pbu.model import validate_identifier
import datetime, re


def check(i, name, val_type, allow_none=False):
    if isinstance(i, dict):
        assert name in i
        value = i[name]
    else:
        assert hasattr(i, name)
        value = getattr(i, name)
    if not allow_none:
        assert value != None
    single(value, val_type)


def single(var, val_type):
    if var != None:
        if val_type == 'timestamp':
            assert isinstance(isoparse(var), datetime.datetime)
        elif val_type == 'identifier':
            assert validate_identifier(var)
        elif val_type == 'ratio':
            assert len(re.findall(r'^\d+\.\d{4}$', var)) > 0
        elif val_type == 'mapping-id':
            assert len(re.findall(r'^m-\d{4,}$', var)) > 0
        else:
            assert isinstance(var, val_type)
