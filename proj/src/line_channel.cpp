#include "geomapf/line_channel.hpp"

#include <algorithm>
#include <stdexcept>

#include <netdb.h>
#include <poll.h>
#include <signal.h>
#include <sys/socket.h>
#include <sys/stat.h>
#include <sys/un.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

namespace geomapf {

namespace {

std::string errno_text(const char* what) { return std::string(what) + ": " + std::strerror(errno); }

bool is_socket(int fd) {
    struct stat st {};
    return fstat(fd, &st) == 0 && S_ISSOCK(st.st_mode);
}

std::unique_ptr<LineChannel> connect_unix(const std::string& path) {
    const int fd = ::socket(AF_UNIX, SOCK_STREAM, 0);
    if (fd < 0) throw TransportError(errno_text("socket"));
    sockaddr_un addr{};
    addr.sun_family = AF_UNIX;
    if (path.size() >= sizeof(addr.sun_path)) {
        ::close(fd);
        throw TransportError("unix socket path too long: " + path);
    }
    std::memcpy(addr.sun_path, path.c_str(), path.size() + 1);
    if (::connect(fd, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0) {
        const std::string msg = errno_text(("connect " + path).c_str());
        ::close(fd);
        throw TransportError(msg);
    }
    return std::make_unique<LineChannel>(fd, fd);
}

std::unique_ptr<LineChannel> connect_tcp(const std::string& spec) {
    const auto colon = spec.rfind(':');
    if (colon == std::string::npos) throw TransportError("tcp endpoint needs host:port, got '" + spec + "'");
    const std::string host = spec.substr(0, colon);
    const std::string port = spec.substr(colon + 1);
    addrinfo hints{};
    hints.ai_family = AF_UNSPEC;
    hints.ai_socktype = SOCK_STREAM;
    addrinfo* res = nullptr;
    if (const int rc = ::getaddrinfo(host.c_str(), port.c_str(), &hints, &res); rc != 0) {
        throw TransportError("resolve " + spec + ": " + ::gai_strerror(rc));
    }
    int fd = -1;
    for (addrinfo* ai = res; ai != nullptr; ai = ai->ai_next) {
        fd = ::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol);
        if (fd < 0) continue;
        if (::connect(fd, ai->ai_addr, ai->ai_addrlen) == 0) break;
        ::close(fd);
        fd = -1;
    }
    ::freeaddrinfo(res);
    if (fd < 0) throw TransportError("cannot connect to tcp:" + spec);
    return std::make_unique<LineChannel>(fd, fd);
}

std::unique_ptr<LineChannel> spawn(const std::string& command) {
    int to_child[2];
    int from_child[2];
    if (::pipe(to_child) != 0) throw TransportError(errno_text("pipe"));
    if (::pipe(from_child) != 0) {
        ::close(to_child[0]);
        ::close(to_child[1]);
        throw TransportError(errno_text("pipe"));
    }
    // A dead evaluator must surface as a TransportError, not kill us.
    ::signal(SIGPIPE, SIG_IGN);
    const pid_t pid = ::fork();
    if (pid < 0) throw TransportError(errno_text("fork"));
    if (pid == 0) {
        ::dup2(to_child[0], STDIN_FILENO);
        ::dup2(from_child[1], STDOUT_FILENO);
        ::close(to_child[0]);
        ::close(to_child[1]);
        ::close(from_child[0]);
        ::close(from_child[1]);
        ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
        ::_exit(127);
    }
    ::close(to_child[0]);
    ::close(from_child[1]);
    return std::make_unique<LineChannel>(from_child[0], to_child[1], true, pid);
}

}  // namespace

LineChannel::LineChannel(int read_fd, int write_fd, bool owns, pid_t child)
    : read_fd_(read_fd), write_fd_(write_fd), owns_(owns), child_(child) {}

LineChannel::~LineChannel() {
    if (owns_) {
        if (write_fd_ >= 0 && write_fd_ != read_fd_) ::close(write_fd_);
        if (read_fd_ >= 0) ::close(read_fd_);
    }
    if (child_ > 0) {
        int status = 0;
        // The child sees EOF on stdin; give it a moment, then insist.
        for (int i = 0; i < 50; ++i) {
            if (::waitpid(child_, &status, WNOHANG) == child_) return;
            ::usleep(10000);
        }
        ::kill(child_, SIGTERM);
        ::waitpid(child_, &status, 0);
    }
}

void LineChannel::write_line(std::string_view line) {
    if (write_fd_ < 0) throw TransportError("write side closed");
    if (line.find('\n') != std::string_view::npos) throw std::invalid_argument("line contains a newline");
    std::string data(line);
    data.push_back('\n');
    const bool sock = is_socket(write_fd_);
    std::size_t sent = 0;
    while (sent < data.size()) {
        const ssize_t n = sock ? ::send(write_fd_, data.data() + sent, data.size() - sent, MSG_NOSIGNAL)
                               : ::write(write_fd_, data.data() + sent, data.size() - sent);
        if (n < 0) {
            if (errno == EINTR) continue;
            throw TransportError(errno_text("write"));
        }
        sent += static_cast<std::size_t>(n);
    }
}

std::optional<std::string> LineChannel::read_line(std::chrono::milliseconds timeout) {
    const auto deadline = std::chrono::steady_clock::now() + timeout;
    for (;;) {
        if (const auto nl = buffer_.find('\n'); nl != std::string::npos) {
            std::string line = buffer_.substr(0, nl);
            buffer_.erase(0, nl + 1);
            if (!line.empty() && line.back() == '\r') line.pop_back();
            return line;
        }
        const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now());
        if (left.count() <= 0) throw TimeoutError("no response within " + std::to_string(timeout.count()) + " ms");
        pollfd pfd{read_fd_, POLLIN, 0};
        const int rc = ::poll(&pfd, 1, static_cast<int>(std::min<long long>(left.count(), 1 << 30)));
        if (rc < 0) {
            if (errno == EINTR) continue;
            throw TransportError(errno_text("poll"));
        }
        if (rc == 0) continue;
        char chunk[4096];
        const ssize_t n = ::read(read_fd_, chunk, sizeof chunk);
        if (n < 0) {
            if (errno == EINTR) continue;
            throw TransportError(errno_text("read"));
        }
        if (n == 0) {
            if (buffer_.empty()) return std::nullopt;
            throw TransportError("stream ended inside a line");
        }
        buffer_.append(chunk, static_cast<std::size_t>(n));
    }
}

std::optional<std::string> LineChannel::read_line() { return read_line(std::chrono::hours(24 * 365)); }

void LineChannel::close_write() {
    if (write_fd_ < 0) return;
    if (write_fd_ == read_fd_) {
        ::shutdown(write_fd_, SHUT_WR);
    } else if (owns_) {
        ::close(write_fd_);
    }
    write_fd_ = -1;
}

std::unique_ptr<LineChannel> LineChannel::connect(const std::string& endpoint) {
    if (endpoint.rfind("unix:", 0) == 0) return connect_unix(endpoint.substr(5));
    if (endpoint.rfind("tcp:", 0) == 0) return connect_tcp(endpoint.substr(4));
    if (endpoint.rfind("exec:", 0) == 0) return spawn(endpoint.substr(5));
    throw TransportError("unknown endpoint scheme: '" + endpoint + "'");
}

std::pair<std::unique_ptr<LineChannel>, std::unique_ptr<LineChannel>> LineChannel::make_pair() {
    int fds[2];
    if (::socketpair(AF_UNIX, SOCK_STREAM, 0, fds) != 0) throw TransportError(errno_text("socketpair"));
    return {std::make_unique<LineChannel>(fds[0], fds[0]), std::make_unique<LineChannel>(fds[1], fds[1])};
}

}  // namespace geomapf
