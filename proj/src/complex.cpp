// filled in as the build proceeds
