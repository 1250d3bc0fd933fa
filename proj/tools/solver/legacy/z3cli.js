#!/usr/bin/env node
// SMT-LIB 2 command-line front end for the z3 WASM build.
//
// Reads an SMT-LIB 2 script on stdin and writes the solver's output
// (status tokens, models, diagnostics) to stdout, mirroring `z3 -in -smt2`.
// Drives the emscripten module directly (skipping the package's API
// wrapper, which builds thousands of bindings we never call).
//
// Accepted arguments, for drop-in compatibility with the native z3 binary:
//   -in, -smt2     ignored (stdin/SMT-LIB 2 is the only mode)
//   -t:N           soft timeout per query, milliseconds
//   -T:N           hard timeout for the whole run, seconds
//   key=value      z3 global parameter
'use strict';

const fs = require('fs');
const path = require('path');

function parseArgs(argv) {
  const params = [];
  for (const arg of argv) {
    if (arg === '-in' || arg === '-smt2') continue;
    let m = /^-t:(\d+)$/.exec(arg);
    if (m) { params.push(['timeout', m[1]]); continue; }
    m = /^-T:(\d+)$/.exec(arg);
    if (m) { setTimeout(() => process.exit(6), Number(m[1]) * 1000).unref(); continue; }
    m = /^([A-Za-z0-9_.]+)=(.*)$/.exec(arg);
    if (m) { params.push([m[1], m[2]]); continue; }
    process.stderr.write(`z3cli: unknown argument '${arg}'\n`);
    process.exit(110);
  }
  return params;
}

async function main() {
  const params = parseArgs(process.argv.slice(2));
  const chunks = [];
  for await (const chunk of process.stdin) chunks.push(chunk);
  const script = Buffer.concat(chunks).toString('utf8');

  const buildDir = path.join(path.dirname(require.resolve('z3-solver/package.json')), 'build');
  const initModule = require(path.join(buildDir, 'z3-built.js'));
  const z3 = await initModule({
    wasmBinary: fs.readFileSync(path.join(buildDir, 'z3-built.wasm')),
  });

  for (const [key, value] of params)
    z3.ccall('Z3_global_param_set', null, ['string', 'string'], [key, value]);
  const cfg = z3._Z3_mk_config();
  const ctx = z3._Z3_mk_context(cfg);
  // a fresh context aborts the process on command errors; the no-op
  // handler makes them print-and-continue like the native binary
  z3._set_noop_error_handler(ctx);
  let out;
  try {
    out = z3.ccall('Z3_eval_smtlib2_string', 'string', ['number', 'string'], [ctx, script]);
  } catch (err) {
    // command-level failures surface as a thrown "(error ...)"; the native
    // binary prints these on stdout and keeps its zero exit status
    const message = `${err && err.message ? err.message : err}`;
    process.stdout.write(message.startsWith('(error') ? `${message}\n`
                                                      : `(error "${message}")\n`);
    process.exit(0);
  }
  process.stdout.write(out);
  process.exit(0);
}

main().catch(err => {
  process.stderr.write(`z3cli: ${err && err.message ? err.message : err}\n`);
  process.exit(1);
});
