#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

namespace natrob::util {

class ProcessError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Runs `command` through /bin/sh and returns its exit status (128+signal when
/// killed by a signal). Throws ProcessError when the shell cannot be spawned.
int run_shell(const std::string& command);

/// Bidirectional newline-delimited text channel.
class LineChannel {
public:
    virtual ~LineChannel() = default;
    virtual void write_line(const std::string& line) = 0;
    /// Next line without its terminator, or nullopt at end of stream.
    virtual std::optional<std::string> read_line() = 0;
};

/// Child process speaking lines over its stdin/stdout.
std::unique_ptr<LineChannel> spawn_line_process(const std::string& command);

/// TCP connection to host:port.
std::unique_ptr<LineChannel> connect_tcp(const std::string& host, int port);

/// Accepts either "tcp://host:port" or a shell command.
std::unique_ptr<LineChannel> open_channel(const std::string& endpoint);

}  // namespace natrob::util
