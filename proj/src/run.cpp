namespace affalg {}
