/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef BCS_ERRORS_HH
#define BCS_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace bcs
{
    /// Malformed or inconsistent input (bad symbols, dead nodes, parse errors).
    class InputError : public std::runtime_error
    {
        public:
            explicit InputError(const std::string & message) :
                std::runtime_error(message)
            {
            }
    };

    /// A configured size or enumeration cap was exceeded. Never reported as a
    /// NO answer.
    class ResourceError : public std::runtime_error
    {
        public:
            explicit ResourceError(const std::string & message) :
                std::runtime_error(message)
            {
            }
    };

    /// Indicates a solver bug, e.g. a certificate that does not replay.
    class InternalError : public std::logic_error
    {
        public:
            explicit InternalError(const std::string & message) :
                std::logic_error(message)
            {
            }
    };
}

#endif
