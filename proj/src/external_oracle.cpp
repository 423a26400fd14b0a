#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <thread>

#include "alma/errors.hpp"
#include "alma/oracles.hpp"

namespace alma {

namespace {

std::string escapeBytes(const std::string& s) {
    std::string out;
    for (unsigned char c : s) {
        if (c >= 0x20 && c < 0x7f && c != '\\') {
            out += static_cast<char>(c);
        } else {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\x%02x", c);
            out += buf;
        }
    }
    return out;
}

}  // namespace

ExternalOracle::ExternalOracle(ExternalOracleSpec spec)
    : spec_(std::move(spec)), alphabet_(spec_.lasso ? spec_.alphabet.withSeparator() : spec_.alphabet) {
    if (spec_.command.empty()) throw InputError("external oracle command is empty");
    start();
}

ExternalOracle::~ExternalOracle() { stop(); }

void ExternalOracle::start() {
    // A dead child must surface as a write error, not kill us.
    ::signal(SIGPIPE, SIG_IGN);
    int in[2], out[2];
    if (::pipe(in) != 0) throw OracleError(std::string("pipe: ") + std::strerror(errno));
    if (::pipe(out) != 0) {
        ::close(in[0]);
        ::close(in[1]);
        throw OracleError(std::string("pipe: ") + std::strerror(errno));
    }
    const pid_t pid = ::fork();
    if (pid < 0) throw OracleError(std::string("fork: ") + std::strerror(errno));
    if (pid == 0) {
        ::dup2(in[0], STDIN_FILENO);
        ::dup2(out[1], STDOUT_FILENO);
        ::close(in[0]);
        ::close(in[1]);
        ::close(out[0]);
        ::close(out[1]);
        if (!spec_.workingDirectory.empty() && ::chdir(spec_.workingDirectory.c_str()) != 0) ::_exit(126);
        ::execl("/bin/sh", "sh", "-c", spec_.command.c_str(), static_cast<char*>(nullptr));
        ::_exit(127);
    }
    ::close(in[0]);
    ::close(out[1]);
    ::fcntl(in[1], F_SETFD, FD_CLOEXEC);
    ::fcntl(out[0], F_SETFD, FD_CLOEXEC);
    pid_ = pid;
    toChild_ = in[1];
    fromChild_ = out[0];
}

void ExternalOracle::stop() noexcept {
    if (pid_ < 0) return;
    if (toChild_ >= 0) {
        static constexpr char quit[] = "quit\n";
        [[maybe_unused]] auto n = ::write(toChild_, quit, sizeof quit - 1);
        ::close(toChild_);
    }
    if (fromChild_ >= 0) ::close(fromChild_);
    int status = 0;
    for (int i = 0; i < 100; ++i) {
        if (::waitpid(pid_, &status, WNOHANG) != 0) {
            pid_ = -1;
            break;
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(10));
    }
    if (pid_ >= 0) {
        ::kill(pid_, SIGKILL);
        ::waitpid(pid_, &status, 0);
    }
    pid_ = toChild_ = fromChild_ = -1;
}

bool ExternalOracle::ask(const std::string& word) {
    if (pid_ < 0) throw OracleError("external oracle is not running");
    const std::string line = word + "\n";
    std::size_t written = 0;
    while (written < line.size()) {
        auto n = ::write(toChild_, line.data() + written, line.size() - written);
        if (n < 0) {
            if (errno == EINTR) continue;
            throw OracleError("external oracle '" + spec_.command + "' stopped accepting input: " +
                              std::strerror(errno));
        }
        written += static_cast<std::size_t>(n);
    }
    ++sent_;

    const auto deadline = std::chrono::steady_clock::now() + spec_.timeout;
    std::size_t eol;
    while ((eol = pending_.find('\n')) == std::string::npos) {
        const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
            deadline - std::chrono::steady_clock::now());
        if (left.count() <= 0) {
            throw OracleError("external oracle timed out after " + std::to_string(spec_.timeout.count()) +
                              " ms on query '" + word + "'");
        }
        pollfd pfd{fromChild_, POLLIN, 0};
        const int ready = ::poll(&pfd, 1, static_cast<int>(left.count()));
        if (ready < 0 && errno == EINTR) continue;
        if (ready <= 0) continue;
        char buf[256];
        auto n = ::read(fromChild_, buf, sizeof buf);
        if (n < 0 && errno == EINTR) continue;
        if (n <= 0) {
            throw OracleError("external oracle exited while answering '" + word + "'" +
                              (pending_.empty() ? "" : " (partial reply '" + escapeBytes(pending_) + "')"));
        }
        pending_.append(buf, static_cast<std::size_t>(n));
    }
    std::string reply = pending_.substr(0, eol);
    pending_.erase(0, eol + 1);
    if (!reply.empty() && reply.back() == '\r') reply.pop_back();
    if (reply == "0") return false;
    if (reply == "1") return true;
    throw OracleError("external oracle replied '" + escapeBytes(reply) + "' to '" + word +
                      "', expected 0 or 1");
}

bool ExternalOracle::query(const Word& w) {
    if (auto it = cache_.find(w); it != cache_.end()) return it->second;
    bool answer = false;
    if (spec_.lasso) {
        // Only well-formed u$v words are sent; everything else is outside L$.
        auto sep = static_cast<Symbol>(spec_.alphabet.size());
        if (decodeLasso(w, sep)) answer = ask(alphabet_.format(w));
    } else {
        answer = ask(alphabet_.format(w));
    }
    cache_.emplace(w, answer);
    return answer;
}

}  // namespace alma
