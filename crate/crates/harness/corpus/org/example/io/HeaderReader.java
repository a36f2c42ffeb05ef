package org.example.io;

public class HeaderReader {
    public List<String> readHeader(String path) {
        List<String> out = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader(path));
            String line = reader.readLine();
            if (line != null) {
                out.add(line.trim());
            }
        } catch (FileNotFoundException e) {
            log(e);
        } catch (IOException e) {
            log(e);
        }
        return out;
    }

    public List<String> readTitle(String file) {
        List<String> out = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader(file));
            String line = reader.readLine();
            if (line != null) {
                out.add(line.trim());
            }
        } catch (FileNotFoundException e) {
            log(e);
        } catch (IOException e) {
            log(e);
        }
        return out;
    }

    public List<String> readFirst(String location) {
        List<String> out = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader(location));
            String line = reader.readLine();
            if (line != null) {
                out.add(line.trim());
            }
        } catch (FileNotFoundException e) {
            log(e);
        } catch (IOException e) {
            log(e);
        }
        return out;
    }

    public List<String> readBanner(String name) {
        List<String> out = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader(name));
            String line = reader.readLine();
            if (line != null) {
                out.add(line.trim());
            }
        } catch (FileNotFoundException e) {
            log(e);
        } catch (IOException e) {
            log(e);
        }
        return out;
    }

    public List<String> readPreamble(String source) {
        List<String> out = new ArrayList<String>();
        try {
            BufferedReader reader = new BufferedReader(new FileReader(source));
            String line = reader.readLine();
            if (line != null) {
                out.add(line.trim());
            }
        } catch (FileNotFoundException e) {
            log(e);
        } catch (IOException e) {
            log(e);
        }
        return out;
    }
}
