/* SPDX-License-Identifier: Apache-2.0
 *
 * Copyright 2026 The dsverify Authors
 */
#include "dsv/solver.hpp"

#include "dsv/errors.hpp"

#include <cerrno>
#include <chrono>
#include <csignal>
#include <cstdlib>
#include <cstring>
#include <mutex>
#include <sstream>

#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

namespace dsv {

std::string to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::holds: return "Holds";
        case Outcome::violated: return "Violated";
        case Outcome::unknown: return "Unknown";
        case Outcome::error: return "Error";
    }
    return "Error";
}

namespace {

void ignore_sigpipe_once() {
    static std::once_flag flag;
    std::call_once(flag, [] { ::signal(SIGPIPE, SIG_IGN); });
}

struct RunResult {
    std::string out;
    std::string err;
    bool timed_out = false;
    bool spawn_failed = false;
    int exit_status = 0;
    bool exited_normally = true;
    double seconds = 0.0;
    std::string spawn_message;
};

RunResult run_process(const std::string& path, const std::vector<std::string>& args,
                      const std::string& input, std::chrono::milliseconds timeout) {
    ignore_sigpipe_once();
    RunResult result;

    // O_CLOEXEC so concurrently spawned siblings cannot inherit (and keep
    // open) each other's pipe ends; the child's dup2 below clears the flag
    // on the stdio descriptors it actually uses.
    int in_pipe[2], out_pipe[2], err_pipe[2];
    if (::pipe2(in_pipe, O_CLOEXEC) != 0 || ::pipe2(out_pipe, O_CLOEXEC) != 0 ||
        ::pipe2(err_pipe, O_CLOEXEC) != 0)
        throw solver_error("pipe2() failed: " + std::string(std::strerror(errno)));

    auto start = std::chrono::steady_clock::now();
    pid_t pid = ::fork();
    if (pid < 0)
        throw solver_error("fork() failed: " + std::string(std::strerror(errno)));

    if (pid == 0) {
        ::dup2(in_pipe[0], STDIN_FILENO);
        ::dup2(out_pipe[1], STDOUT_FILENO);
        ::dup2(err_pipe[1], STDERR_FILENO);
        ::close(in_pipe[0]);
        ::close(in_pipe[1]);
        ::close(out_pipe[0]);
        ::close(out_pipe[1]);
        ::close(err_pipe[0]);
        ::close(err_pipe[1]);
        std::vector<char*> argv;
        argv.push_back(const_cast<char*>(path.c_str()));
        for (const auto& a : args) argv.push_back(const_cast<char*>(a.c_str()));
        argv.push_back(nullptr);
        ::execvp(path.c_str(), argv.data());
        // exec failed; report over the (still open) stderr pipe
        std::string msg = "exec failed: " + std::string(std::strerror(errno)) + "\n";
        ssize_t ignored = ::write(STDERR_FILENO, msg.data(), msg.size());
        (void)ignored;
        ::_exit(127);
    }

    ::close(in_pipe[0]);
    ::close(out_pipe[1]);
    ::close(err_pipe[1]);
    ::fcntl(in_pipe[1], F_SETFL, O_NONBLOCK);

    std::size_t written = 0;
    bool stdin_open = true;
    bool stdout_open = true;
    bool stderr_open = true;
    auto deadline = start + timeout;

    char buffer[4096];
    while (stdout_open || stderr_open || stdin_open) {
        auto now = std::chrono::steady_clock::now();
        if (now >= deadline) {
            result.timed_out = true;
            break;
        }
        int wait_ms = static_cast<int>(
            std::chrono::duration_cast<std::chrono::milliseconds>(deadline - now).count());
        if (wait_ms < 1) wait_ms = 1;

        struct pollfd fds[3];
        int nfds = 0;
        int stdin_slot = -1, stdout_slot = -1, stderr_slot = -1;
        if (stdin_open) {
            stdin_slot = nfds;
            fds[nfds++] = {in_pipe[1], POLLOUT, 0};
        }
        if (stdout_open) {
            stdout_slot = nfds;
            fds[nfds++] = {out_pipe[0], POLLIN, 0};
        }
        if (stderr_open) {
            stderr_slot = nfds;
            fds[nfds++] = {err_pipe[0], POLLIN, 0};
        }
        int rc = ::poll(fds, static_cast<nfds_t>(nfds), wait_ms);
        if (rc < 0) {
            if (errno == EINTR) continue;
            break;
        }
        if (rc == 0) continue;  // re-check the deadline

        if (stdin_slot >= 0 && (fds[stdin_slot].revents & (POLLOUT | POLLERR | POLLHUP))) {
            if (fds[stdin_slot].revents & (POLLERR | POLLHUP)) {
                ::close(in_pipe[1]);
                stdin_open = false;
            } else {
                ssize_t w = ::write(in_pipe[1], input.data() + written, input.size() - written);
                if (w > 0) written += static_cast<std::size_t>(w);
                if ((w < 0 && errno != EAGAIN && errno != EINTR) || written == input.size()) {
                    ::close(in_pipe[1]);
                    stdin_open = false;
                }
            }
        }
        if (stdout_slot >= 0 && (fds[stdout_slot].revents & (POLLIN | POLLHUP | POLLERR))) {
            ssize_t r = ::read(out_pipe[0], buffer, sizeof buffer);
            if (r > 0)
                result.out.append(buffer, static_cast<std::size_t>(r));
            else if (r == 0 || (r < 0 && errno != EAGAIN && errno != EINTR)) {
                ::close(out_pipe[0]);
                stdout_open = false;
            }
        }
        if (stderr_slot >= 0 && (fds[stderr_slot].revents & (POLLIN | POLLHUP | POLLERR))) {
            ssize_t r = ::read(err_pipe[0], buffer, sizeof buffer);
            if (r > 0)
                result.err.append(buffer, static_cast<std::size_t>(r));
            else if (r == 0 || (r < 0 && errno != EAGAIN && errno != EINTR)) {
                ::close(err_pipe[0]);
                stderr_open = false;
            }
        }
    }

    if (stdin_open) ::close(in_pipe[1]);
    if (stdout_open) ::close(out_pipe[0]);
    if (stderr_open) ::close(err_pipe[0]);

    if (result.timed_out)
        ::kill(pid, SIGKILL);

    int status = 0;
    while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
    }
    result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.exited_normally = WIFEXITED(status);
    result.exit_status = result.exited_normally ? WEXITSTATUS(status) : -1;
    if (result.exited_normally && result.exit_status == 127 &&
        result.err.find("exec failed:") != std::string::npos) {
        result.spawn_failed = true;
        result.spawn_message = result.err;
    }
    return result;
}

/// First whitespace-trimmed line and the remainder.
std::pair<std::string, std::string> split_first_line(const std::string& text,
                                                     std::size_t from = 0) {
    std::size_t nl = text.find('\n', from);
    if (nl == std::string::npos)
        return {text.substr(from), ""};
    return {text.substr(from, nl - from), text.substr(nl + 1)};
}

std::string trimmed(std::string s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

Verdict classify(const RunResult& run, bool model_requested) {
    Verdict v;
    v.seconds = run.seconds;
    v.timed_out = run.timed_out;

    if (run.spawn_failed) {
        v.outcome = Outcome::error;
        v.message = trimmed(run.spawn_message);
        return v;
    }
    if (run.timed_out) {
        v.outcome = Outcome::unknown;
        return v;
    }

    // Scan stdout for the first status token; any (error ...) line before
    // one means the solver rejected the script.
    std::string remaining = run.out;
    while (!remaining.empty()) {
        auto [line, tail] = split_first_line(remaining);
        std::string token = trimmed(line);
        if (token == "sat") {
            v.outcome = Outcome::holds;
            if (model_requested) {
                std::string model = trimmed(tail);
                if (model.rfind("(error", 0) == 0) {
                    v.outcome = Outcome::error;
                    v.message = model;
                } else {
                    v.model = model;
                }
            }
            return v;
        }
        if (token == "unsat") {
            v.outcome = Outcome::violated;
            return v;
        }
        if (token == "unknown") {
            v.outcome = Outcome::unknown;
            return v;
        }
        if (token.rfind("(error", 0) == 0) {
            v.outcome = Outcome::error;
            v.message = token;
            return v;
        }
        if (!token.empty()) {
            v.outcome = Outcome::error;
            v.message = "unrecognized solver output: " + token;
            return v;
        }
        remaining = tail;
    }

    v.outcome = Outcome::error;
    v.message = run.exited_normally
                    ? (run.exit_status == 0 ? "solver produced no status token"
                                            : "solver exited with status " +
                                                  std::to_string(run.exit_status) + ": " +
                                                  trimmed(run.err))
                    : "solver terminated by signal: " + trimmed(run.err);
    return v;
}

} // namespace

Verdict check_sat(const SmtScript& script, const SolverConfig& cfg) {
    if (cfg.path.empty())
        throw solver_error("solver path is empty; run resolve_solver_path first");
    if (cfg.timeout.count() <= 0)
        throw solver_error("solver timeout must be positive");

    SmtScript effective = script;
    if (cfg.produce_models)
        effective.request_model = true;
    std::string text = render(effective, cfg.script_options);
    RunResult run = run_process(cfg.path, cfg.args, text, cfg.timeout);
    return classify(run, effective.request_model);
}

Verdict get_model(const SmtScript& script, const SolverConfig& cfg) {
    if (!cfg.produce_models)
        throw solver_error("get_model requires a configuration with produce_models");
    SmtScript with_model = script;
    with_model.request_model = true;
    Verdict v = check_sat(with_model, cfg);
    if (v.outcome == Outcome::holds)
        return v;
    if (v.outcome != Outcome::error) {
        v.message = "model unavailable: script is " + to_string(v.outcome);
        v.outcome = Outcome::error;
    }
    return v;
}

void probe_solver(const SolverConfig& cfg) {
    SmtScript trivial;
    trivial.assertions = {"true"};
    SolverConfig probe_cfg = cfg;
    probe_cfg.produce_models = false;
    Verdict v = check_sat(trivial, probe_cfg);
    if (v.outcome != Outcome::holds)
        throw solver_error("solver at '" + cfg.path + "' failed the conformance probe (" +
                           to_string(v.outcome) +
                           (v.message.empty() ? "" : ": " + v.message) + ")");
}

std::string resolve_solver_path(const std::string& explicit_path) {
    if (!explicit_path.empty())
        return explicit_path;
    if (const char* env = std::getenv("DSV_SOLVER"); env && *env)
        return env;
    if (const char* path_env = std::getenv("PATH")) {
        std::stringstream dirs(path_env);
        std::string dir;
        while (std::getline(dirs, dir, ':')) {
            if (dir.empty()) continue;
            std::string candidate = dir + "/z3";
            if (::access(candidate.c_str(), X_OK) == 0)
                return candidate;
        }
    }
    if (::access("tools/solver/z3cli.js", X_OK) == 0)
        return "tools/solver/z3cli.js";
    // relative to the executable, for builds living in <repo>/build
    char exe[4096];
    ssize_t len = ::readlink("/proc/self/exe", exe, sizeof exe - 1);
    if (len > 0) {
        exe[len] = '\0';
        std::string dir(exe);
        if (auto slash = dir.find_last_of('/'); slash != std::string::npos) {
            dir = dir.substr(0, slash);
            for (const char* up : {"/../tools/solver/z3cli.js", "/../../tools/solver/z3cli.js"}) {
                std::string candidate = dir + up;
                if (::access(candidate.c_str(), X_OK) == 0)
                    return candidate;
            }
        }
    }
    throw solver_error(
        "no SMT solver found: pass --solver, set DSV_SOLVER, or put z3 on PATH");
}

} // namespace dsv
