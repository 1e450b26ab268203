#pragma once

#include <sys/types.h>

#include <chrono>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace geomapf {

class BridgeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Connection could not be made, broke, or closed mid-conversation.
class TransportError : public BridgeError {
public:
    using BridgeError::BridgeError;
};

/// Peer sent something that is not a valid protocol message.
class ProtocolError : public BridgeError {
public:
    using BridgeError::BridgeError;
};

/// Peer answered with an error response.
class EvaluatorError : public BridgeError {
public:
    using BridgeError::BridgeError;
};

class TimeoutError : public BridgeError {
public:
    using BridgeError::BridgeError;
};

/// Newline-framed byte stream over a pair of file descriptors.
class LineChannel {
public:
    /// Takes ownership of the descriptors when `owns` is set; `child` is a
    /// process to reap on destruction.
    LineChannel(int read_fd, int write_fd, bool owns = true, pid_t child = -1);
    ~LineChannel();

    LineChannel(const LineChannel&) = delete;
    LineChannel& operator=(const LineChannel&) = delete;

    /// Writes `line` plus '\n'. Throws std::invalid_argument if `line` contains '\n'.
    void write_line(std::string_view line);

    /// Next line without its '\n'; nullopt on clean end of stream.
    /// Throws TimeoutError if nothing complete arrives within `timeout`.
    std::optional<std::string> read_line(std::chrono::milliseconds timeout);
    std::optional<std::string> read_line();

    /// Shuts down the write side so the peer sees end of stream.
    void close_write();

    /// "unix:<path>", "tcp:<host>:<port>" or "exec:<shell command>".
    static std::unique_ptr<LineChannel> connect(const std::string& endpoint);

    /// Connected in-process pair (socketpair).
    static std::pair<std::unique_ptr<LineChannel>, std::unique_ptr<LineChannel>> make_pair();

private:
    int read_fd_;
    int write_fd_;
    bool owns_;
    pid_t child_;
    std::string buffer_;
};

}  // namespace geomapf
