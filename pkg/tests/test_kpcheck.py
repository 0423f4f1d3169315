#
# Copyright (c) 2024 - present.  The kpcheck authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
import json

import pytest
import yaml

from kpcheck import EXIT_OK, EXIT_STALL, EXIT_USAGE, Main, load_config
from kp_lib.errors import UsageError


def run(argv, capsys):
    code = Main(argv).start()
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def matrix_file(tmp_path):
    def write(text, name='matrix.txt'):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write


class TestVerifyCommands(object):
    def test_verify_main_table(self, capsys):
        code, out, _ = run(['verify-main', '--n-max', '3'], capsys)
        assert code == EXIT_OK
        assert 'values: 1, 3, 50, 5145' in out

    def test_verify_main_json(self, capsys):
        code, out, _ = run(['verify-main', '--n-max', '2', '--format', 'json'], capsys)
        data = json.loads(out)
        assert code == EXIT_OK
        assert data['sequence'] == ['1', '3', '50']
        assert data['version'] == '0.1.0'

    def test_verify_rabbit_probe_csv(self, capsys):
        code, out, _ = run(['verify-rabbit', '-n', '2', '--probe', '-f', 'csv'], capsys)
        assert code == EXIT_OK
        assert 'out-of-domain' in out

    def test_verify_recurrence(self, capsys):
        code, out, _ = run(['verify-recurrence', '--n-max', '3'], capsys)
        assert code == EXIT_OK
        assert 'fail 0' in out


class TestProve(object):
    def test_fixed_m(self, capsys):
        code, out, _ = run(['prove', '--mode', 'fixed-m', '--m', '2', '--format', 'yaml'], capsys)
        assert code == EXIT_OK
        assert yaml.safe_load(out)['status'] == 'proven'

    def test_base_default(self, capsys):
        code, out, _ = run(['prove'], capsys)
        assert code == EXIT_OK
        assert 'prove base: proven' in out

    @pytest.mark.parametrize('argv', [
        ['prove', '--mode', 'fixed-m', '--m', '1'],
        ['prove', '--mode', 'fixed-m'],
    ])
    def test_bad_m(self, argv, capsys):
        code, _, err = run(argv, capsys)
        assert code == EXIT_USAGE
        assert err.startswith('ERROR:')

    def test_stall_exit_code_value(self):
        assert EXIT_STALL == 3


class TestDet(object):
    def test_plain(self, matrix_file, capsys):
        code, out, _ = run(['det', matrix_file('2 1\n1 2\n')], capsys)
        assert code == EXIT_OK
        assert out == '3\nfallback: no\n'

    def test_singular_bareiss(self, matrix_file, capsys):
        code, out, _ = run(['det', matrix_file('1 2\n2 4\n'), '--engine', 'bareiss'], capsys)
        assert code == EXIT_OK
        assert out == '0\n'

    def test_fraction_output(self, matrix_file, capsys):
        code, out, _ = run(['det', matrix_file('rows: [["1/2", "1/3"], ["1/4", 1]]\n', 'm.yaml'),
                            '-e', 'cofactor'], capsys)
        assert code == EXIT_OK
        assert out == '5/12\n'

    def test_tableau(self, matrix_file, capsys):
        code, out, _ = run(['det', matrix_file('0 1 1\n1 0 1\n1 1 0\n'), '--show-tableau'], capsys)
        assert code == EXIT_OK
        assert out.startswith('2\nfallback: yes\n')
        assert 'layer 2:' in out

    @pytest.mark.parametrize('text', ['1 2 3\n4 5\n6 7 8\n', '1 2\n3 4\n5 6\n', '1 x\n2 3\n'])
    def test_parse_errors(self, text, matrix_file, capsys):
        code, _, err = run(['det', matrix_file(text)], capsys)
        assert code == EXIT_USAGE
        assert 'line' in err

    def test_invalid_utf8(self, tmp_path, capsys):
        path = tmp_path / 'matrix.txt'
        path.write_bytes(b'1 2\n\xff\xfe 4\n')
        code, out, err = run(['det', str(path)], capsys)
        assert code == EXIT_USAGE
        assert out == ''
        assert 'line 2, column 1' in err

    def test_missing_file(self, tmp_path, capsys):
        code, _, err = run(['det', str(tmp_path / 'absent.txt')], capsys)
        assert code == EXIT_USAGE

    def test_unknown_engine(self, matrix_file, capsys):
        code, _, _ = run(['det', matrix_file('1\n'), '--engine', 'gauss'], capsys)
        assert code == EXIT_USAGE


class TestBench(object):
    def test_refusal_recorded(self, capsys):
        code, out, _ = run(['bench', '--orders', '9', '--engines', 'cofactor'], capsys)
        assert code == EXIT_OK
        assert 'refused' in out

    def test_agreement(self, capsys):
        code, out, _ = run(['bench', '--orders', '1,4', '--engines', 'bareiss,condense', '-f', 'json'], capsys)
        assert code == EXIT_OK
        values = [r['value'] for r in json.loads(out)['records']]
        assert values == ['1', '1', '5145', '5145']

    def test_unknown_family(self, capsys):
        code, _, _ = run(['bench', '--family', 'hilbert'], capsys)
        assert code == EXIT_USAGE


class TestConfig(object):
    def test_config_supplies_defaults(self, tmp_path, capsys):
        config = tmp_path / 'kp.yaml'
        config.write_text('n-max: 1\nformat: json\n')
        code, out, _ = run(['verify-main', '--config', str(config)], capsys)
        assert code == EXIT_OK
        assert json.loads(out)['sequence'] == ['1', '3']

    def test_flags_win(self, tmp_path, capsys):
        config = tmp_path / 'kp.yaml'
        config.write_text('n_max: 1\nformat: json\n')
        code, out, _ = run(['verify-main', '--config', str(config), '--n-max', '2'], capsys)
        assert json.loads(out)['sequence'] == ['1', '3', '50']

    def test_unknown_key(self, tmp_path, capsys):
        config = tmp_path / 'kp.yaml'
        config.write_text('colour: blue\n')
        code, _, err = run(['verify-main', '--config', str(config)], capsys)
        assert code == EXIT_USAGE
        assert 'colour' in err
        with pytest.raises(UsageError):
            load_config(str(config))

    def test_string_values_are_converted(self, tmp_path, capsys):
        config = tmp_path / 'kp.yaml'
        config.write_text('n-max: "2"\nformat: json\njobs: "1"\n')
        code, out, _ = run(['verify-main', '--config', str(config)], capsys)
        assert code == EXIT_OK
        assert json.loads(out)['sequence'] == ['1', '3', '50']

    @pytest.mark.parametrize('text, key', [
        ('n-max: five\n', 'n_max'),
        ('jobs: [1, 2]\n', 'jobs'),
        ('probe: 1\n', 'probe'),
        ('seed: true\n', 'seed'),
    ])
    def test_bad_values(self, tmp_path, capsys, text, key):
        config = tmp_path / 'kp.yaml'
        config.write_text(text)
        code, _, err = run(['verify-rabbit', '--config', str(config)], capsys)
        assert code == EXIT_USAGE
        assert "'{}'".format(key) in err

    def test_list_values(self, tmp_path):
        config = tmp_path / 'kp.yaml'
        config.write_text('orders: [2, 3]\nengines: [bareiss]\n')
        assert load_config(str(config)) == {'orders': '2,3', 'engines': 'bareiss'}

    def test_argparse_errors_exit_2(self):
        with pytest.raises(SystemExit) as excinfo:
            Main(['no-such-command'])
        assert excinfo.value.code == 2
