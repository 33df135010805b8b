#include "natrob/util/process.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <signal.h>
#include <spawn.h>
#include <sys/socket.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

extern char** environ;

namespace natrob::util {

namespace {

std::string errno_text(const std::string& what) { return what + ": " + std::strerror(errno); }

void write_all(int fd, const std::string& data) {
    std::size_t done = 0;
    while (done < data.size()) {
        const ssize_t n = ::write(fd, data.data() + done, data.size() - done);
        if (n < 0) {
            if (errno == EINTR)
                continue;
            throw ProcessError(errno_text("write"));
        }
        done += static_cast<std::size_t>(n);
    }
}

class FdReader {
public:
    explicit FdReader(int fd) : fd_(fd) {}

    std::optional<std::string> read_line() {
        while (true) {
            const auto nl = buffer_.find('\n');
            if (nl != std::string::npos) {
                std::string line = buffer_.substr(0, nl);
                buffer_.erase(0, nl + 1);
                if (!line.empty() && line.back() == '\r')
                    line.pop_back();
                return line;
            }
            char chunk[4096];
            const ssize_t n = ::read(fd_, chunk, sizeof chunk);
            if (n < 0) {
                if (errno == EINTR)
                    continue;
                throw ProcessError(errno_text("read"));
            }
            if (n == 0) {
                if (buffer_.empty())
                    return std::nullopt;
                std::string rest;
                rest.swap(buffer_);
                return rest;
            }
            buffer_.append(chunk, static_cast<std::size_t>(n));
        }
    }

private:
    int fd_;
    std::string buffer_;
};

class ProcessChannel final : public LineChannel {
public:
    explicit ProcessChannel(const std::string& command) {
        int in_pipe[2];
        int out_pipe[2];
        if (::pipe(in_pipe) != 0)
            throw ProcessError(errno_text("pipe"));
        if (::pipe(out_pipe) != 0) {
            ::close(in_pipe[0]);
            ::close(in_pipe[1]);
            throw ProcessError(errno_text("pipe"));
        }
        posix_spawn_file_actions_t actions;
        posix_spawn_file_actions_init(&actions);
        posix_spawn_file_actions_adddup2(&actions, in_pipe[0], STDIN_FILENO);
        posix_spawn_file_actions_adddup2(&actions, out_pipe[1], STDOUT_FILENO);
        posix_spawn_file_actions_addclose(&actions, in_pipe[1]);
        posix_spawn_file_actions_addclose(&actions, out_pipe[0]);
        const char* argv[] = {"/bin/sh", "-c", command.c_str(), nullptr};
        const int rc = posix_spawn(&pid_, "/bin/sh", &actions, nullptr, const_cast<char**>(argv), environ);
        posix_spawn_file_actions_destroy(&actions);
        ::close(in_pipe[0]);
        ::close(out_pipe[1]);
        if (rc != 0) {
            ::close(in_pipe[1]);
            ::close(out_pipe[0]);
            throw ProcessError("cannot spawn '" + command + "': " + std::strerror(rc));
        }
        to_child_ = in_pipe[1];
        from_child_ = out_pipe[0];
        reader_ = std::make_unique<FdReader>(from_child_);
        ::signal(SIGPIPE, SIG_IGN);
    }

    ~ProcessChannel() override {
        ::close(to_child_);
        ::close(from_child_);
        int status = 0;
        ::waitpid(pid_, &status, 0);
    }

    void write_line(const std::string& line) override { write_all(to_child_, line + "\n"); }
    std::optional<std::string> read_line() override { return reader_->read_line(); }

private:
    pid_t pid_ = -1;
    int to_child_ = -1;
    int from_child_ = -1;
    std::unique_ptr<FdReader> reader_;
};

class TcpChannel final : public LineChannel {
public:
    TcpChannel(const std::string& host, int port) {
        addrinfo hints{};
        hints.ai_family = AF_UNSPEC;
        hints.ai_socktype = SOCK_STREAM;
        addrinfo* res = nullptr;
        const std::string service = std::to_string(port);
        if (const int rc = ::getaddrinfo(host.c_str(), service.c_str(), &hints, &res); rc != 0)
            throw ProcessError("cannot resolve " + host + ": " + ::gai_strerror(rc));
        for (addrinfo* ai = res; ai != nullptr; ai = ai->ai_next) {
            fd_ = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
            if (fd_ < 0)
                continue;
            if (::connect(fd_, ai->ai_addr, ai->ai_addrlen) == 0)
                break;
            ::close(fd_);
            fd_ = -1;
        }
        ::freeaddrinfo(res);
        if (fd_ < 0)
            throw ProcessError("cannot connect to " + host + ":" + service);
        reader_ = std::make_unique<FdReader>(fd_);
        ::signal(SIGPIPE, SIG_IGN);
    }

    ~TcpChannel() override { ::close(fd_); }

    void write_line(const std::string& line) override { write_all(fd_, line + "\n"); }
    std::optional<std::string> read_line() override { return reader_->read_line(); }

private:
    int fd_ = -1;
    std::unique_ptr<FdReader> reader_;
};

}  // namespace

int run_shell(const std::string& command) {
    pid_t pid = -1;
    const char* argv[] = {"/bin/sh", "-c", command.c_str(), nullptr};
    if (const int rc = posix_spawn(&pid, "/bin/sh", nullptr, nullptr, const_cast<char**>(argv), environ); rc != 0)
        throw ProcessError("cannot spawn '" + command + "': " + std::strerror(rc));
    int status = 0;
    while (::waitpid(pid, &status, 0) < 0) {
        if (errno != EINTR)
            throw ProcessError(errno_text("waitpid"));
    }
    if (WIFEXITED(status))
        return WEXITSTATUS(status);
    if (WIFSIGNALED(status))
        return 128 + WTERMSIG(status);
    return -1;
}

std::unique_ptr<LineChannel> spawn_line_process(const std::string& command) {
    return std::make_unique<ProcessChannel>(command);
}

std::unique_ptr<LineChannel> connect_tcp(const std::string& host, int port) {
    return std::make_unique<TcpChannel>(host, port);
}

std::unique_ptr<LineChannel> open_channel(const std::string& endpoint) {
    constexpr std::string_view scheme = "tcp://";
    if (endpoint.rfind(scheme, 0) == 0) {
        const std::string rest = endpoint.substr(scheme.size());
        const auto colon = rest.rfind(':');
        if (colon == std::string::npos)
            throw ProcessError("tcp endpoint needs host:port: " + endpoint);
        return connect_tcp(rest.substr(0, colon), std::stoi(rest.substr(colon + 1)));
    }
    return spawn_line_process(endpoint);
}

}  // namespace natrob::util
