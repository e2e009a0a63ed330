#include "bosy/external.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "bosy/dimacs.hpp"
#include "bosy/error.hpp"

namespace bosy {

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'') out += "'\\''";
        else out += c;
    }
    out += "'";
    return out;
}

RunResult run_shell_capture(const std::string& command,
                            std::optional<std::chrono::milliseconds> timeout) {
    int fds[2];
    if (pipe(fds) != 0) throw Error("failed to create pipe for external command");

    const pid_t pid = fork();
    if (pid < 0) {
        close(fds[0]);
        close(fds[1]);
        throw Error("failed to spawn external command");
    }
    if (pid == 0) {
        close(fds[0]);
        dup2(fds[1], STDOUT_FILENO);
        close(fds[1]);
        execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
        _exit(127);
    }
    close(fds[1]);

    RunResult result;
    const auto deadline = timeout ? std::optional(std::chrono::steady_clock::now() + *timeout)
                                  : std::nullopt;
    char buffer[4096];
    while (true) {
        int wait_ms = -1;
        if (deadline) {
            const auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
                *deadline - std::chrono::steady_clock::now());
            wait_ms = int(std::max<std::int64_t>(remaining.count(), 0));
        }
        struct pollfd pfd {fds[0], POLLIN, 0};
        const int ready = poll(&pfd, 1, wait_ms);
        if (ready > 0) {
            const ssize_t n = read(fds[0], buffer, sizeof buffer);
            if (n > 0) {
                result.output.append(buffer, std::size_t(n));
                continue;
            }
            break;  // EOF
        }
        if (ready == 0) {  // deadline reached
            result.timed_out = true;
            kill(pid, SIGKILL);
            break;
        }
        if (errno == EINTR) continue;
        break;
    }
    close(fds[0]);

    int status = 0;
    waitpid(pid, &status, 0);
    if (WIFEXITED(status)) result.exit_status = WEXITSTATUS(status);
    else result.exit_status = -1;
    return result;
}

namespace {

class TempFile {
public:
    explicit TempFile(const std::string& contents) {
        const char* tmpdir = std::getenv("TMPDIR");
        path_ = std::string(tmpdir ? tmpdir : "/tmp") + "/bosy-XXXXXX";
        const int fd = mkstemp(path_.data());
        if (fd < 0) throw Error("failed to create temporary instance file");
        std::size_t written = 0;
        while (written < contents.size()) {
            const ssize_t n = write(fd, contents.data() + written, contents.size() - written);
            if (n <= 0) {
                close(fd);
                throw Error("failed to write temporary instance file");
            }
            written += std::size_t(n);
        }
        close(fd);
    }

    ~TempFile() { unlink(path_.c_str()); }

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

std::string substitute_path(const std::string& command_template, const std::string& path) {
    std::string cmd;
    std::size_t pos = 0;
    bool replaced = false;
    while (true) {
        const auto hit = command_template.find("{}", pos);
        if (hit == std::string::npos) {
            cmd += command_template.substr(pos);
            break;
        }
        cmd += command_template.substr(pos, hit - pos);
        cmd += shell_quote(path);
        pos = hit + 2;
        replaced = true;
    }
    if (!replaced) cmd += " " + shell_quote(path);
    return cmd;
}

}  // namespace

ExternalResult solve_external(const std::string& command_template, const std::string& instance,
                              SolverFormat format,
                              std::optional<std::chrono::milliseconds> timeout) {
    (void)format;  // both formats share the exit-code and v-line conventions
    const TempFile file(instance);
    const std::string command = substitute_path(command_template, file.path());

    const RunResult run = run_shell_capture(command, timeout);
    if (run.timed_out) throw Error("external solver timed out: " + command_template);
    if (run.exit_status == 20) return ExternalResult{false, {}};
    if (run.exit_status != 10)
        throw Error("external solver exited with status " + std::to_string(run.exit_status) +
                    " (no verdict): " + command_template);

    ExternalResult result;
    result.sat = true;
    result.literals = parse_assignment_lines(run.output);
    if (result.literals.empty()) {
        // an empty top-level block legitimately yields a bare "V 0" line
        bool has_assignment_line = false;
        for (std::size_t i = 0; i < run.output.size(); ++i) {
            if ((run.output[i] == 'v' || run.output[i] == 'V') &&
                (i == 0 || run.output[i - 1] == '\n') &&
                (i + 1 >= run.output.size() || run.output[i + 1] == ' ' ||
                 run.output[i + 1] == '\n')) {
                has_assignment_line = true;
                break;
            }
        }
        if (!has_assignment_line)
            throw Error("unparseable solver output: satisfiable verdict without assignment lines");
    }
    return result;
}

}  // namespace bosy
